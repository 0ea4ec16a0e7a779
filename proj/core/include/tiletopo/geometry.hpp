#pragma once

// Planar helpers: an exact simple-polygon test and float Hausdorff distances
// for diagnostics.

#include "tiletopo/arith.hpp"

#include <array>
#include <vector>

namespace tiletopo {

using PointD = std::array<double, 2>;

PointD to_double(const RationalPoint& p);
std::vector<PointD> to_double(const std::vector<RationalPoint>& pts);

/// True when the closed polygon through `vertices` has at least three
/// vertices, no repeated vertex and no two non-adjacent edges meeting, and no
/// adjacent edges folding back onto each other. Exact; a float grid is used
/// only to pick candidate pairs.
bool is_simple_polygon(const std::vector<RationalPoint>& vertices);

/// Exact test of whether closed segments [p1,p2] and [q1,q2] meet.
bool segments_intersect(const RationalPoint& p1, const RationalPoint& p2,
                        const RationalPoint& q1, const RationalPoint& q2);

/// Hausdorff distance between two finite point sets.
double hausdorff_points(const std::vector<PointD>& p, const std::vector<PointD>& q);

/// Hausdorff distance between two closed polygonal curves, computed by
/// branch and bound along the edges; the result is within `tol` below the
/// true value (up to float rounding).
double hausdorff_polygons(const std::vector<PointD>& p, const std::vector<PointD>& q, double tol = 1e-12);

}  // namespace tiletopo
