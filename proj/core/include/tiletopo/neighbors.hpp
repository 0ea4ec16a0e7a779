#pragma once

// The neighbor set S = { s != 0 : T meets T + s }, by formula and by an
// exhaustive graph search, plus depth-m subdivision intersection tests.

#include "tiletopo/numsys.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tiletopo {

struct NeighborSet {
  /// Sorted by (y, x).
  std::vector<Vec2i> members;
  std::int64_t j = 0;

  bool contains(Vec2i s) const;
  bool contains_or_zero(Vec2i s) const { return s.is_zero() || contains(s); }
  std::size_t size() const { return members.size(); }

  friend bool operator==(const NeighborSet&, const NeighborSet&) = default;
};

/// J = max{1, floor((B-1)/(B-A+1))}
std::int64_t neighbor_j(const TileParams& params);

NeighborSet neighbor_set_formula(const TileParams& params);

/// Half-widths (hx, hy) of a box guaranteed to contain every
/// sum_{i>=1} M^-i (d_i, 0) with |d_i| <= B-1. Exact rational bound.
std::pair<Rational, Rational> neighbor_search_bound(const TileParams& params);

/// All s != 0 in the bound box from which the transition graph
/// s -> M s + (a'-a) e1 admits an infinite path.
NeighborSet neighbor_set_search(const TileParams& params);

/// The neighbor set expressed in the raw lattice of the original instance
/// (s -> C P s).
std::vector<Vec2i> neighbors_in_raw_basis(const NeighborSet& set,
                                          const AffineNormalization& affinity);

/// sum_{i=1..m} M^{m-i} (u_i - v_i, 0)
BigVec2 subdivision_diff(const DigitWord& u, const DigitWord& v, const TileParams& params);

/// Decides T_u meets T_v: the difference vector is 0 or a neighbor.
bool subdivision_intersects(const DigitWord& u, const DigitWord& v, const TileParams& params,
                            const NeighborSet& set);
bool subdivision_intersects(const DigitWord& u, const DigitWord& v, const TileParams& params);

/// For 2A-B = 3 and u - v = (1, A-2, -1): the two addresses
/// 0.u(0(B-1)) and 0.v((B-1)0) of the single point of T_u and T_v.
std::optional<std::pair<Address, Address>> adjacent_singleton_point(const DigitWord& u,
                                                                    const DigitWord& v,
                                                                    const TileParams& params);

}  // namespace tiletopo
