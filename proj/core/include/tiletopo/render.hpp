#pragma once

// Deterministic SVG output of boundary approximations, tile patches and the
// cut point.

#include "tiletopo/parametrization.hpp"

#include <string>
#include <vector>

namespace tiletopo {

/// |r| rounded to `digits` significant decimal digits (half away from zero),
/// written without exponent and without trailing zeros.
std::string format_decimal(const Rational& r, int digits = 12);

struct ScenePolygon {
  std::vector<RationalPoint> vertices;
  std::string fill = "none";
  std::string stroke = "#000000";
};

struct SceneMarker {
  RationalPoint at;
  std::string label;
};

struct Scene {
  std::string title;
  std::vector<ScenePolygon> polygons;
  std::vector<SceneMarker> markers;
  /// Bounding box of all geometry; set by fit().
  RationalPoint lo;
  RationalPoint hi;

  /// Exact bounding box of every vertex and marker.
  void fit();
};

/// SVG 1.1 with the y axis pointing up; the view box adds a 5% margin.
std::string to_svg(const Scene& scene);

/// The level-n polygon, checked to be a simple closed curve first
/// (CertificateFailure otherwise).
Scene boundary_scene(const OrderedContactGraph& ordered, int n, std::size_t budget = 1'000'000);
/// The level-n polygon and its translates by every neighbor.
Scene patch_scene(const OrderedContactGraph& ordered, int n, std::size_t budget = 1'000'000);
/// The level-n polygon with a marker at the cut point; WrongRegime unless
/// 2A-B >= 5.
Scene cutpoint_scene(const OrderedContactGraph& ordered, int n, std::size_t budget = 1'000'000);

std::string render_boundary(const TileParams& params, int n);
std::string render_patch(const TileParams& params, int n);
std::string render_cutpoint(const TileParams& params, int n);

}  // namespace tiletopo
