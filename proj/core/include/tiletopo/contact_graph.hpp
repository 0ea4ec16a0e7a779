#pragma once

// The contact graph G on the six contact neighbors, its Perron data, and the
// ordered extension whose lexicographically ordered walks run around the
// boundary.

#include "tiletopo/numsys.hpp"
#include "tiletopo/polynomial.hpp"
#include "tiletopo/qbeta.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tiletopo {

inline constexpr int kContactStates = 6;

/// Edge s -> s' labelled a|a' with M s + a' e1 = s' + a e1. States are
/// 0-based indices into ContactGraph::states.
struct ContactEdge {
  int source = 0;
  int target = 0;
  Digit a = 0;
  Digit a_prime = 0;
  friend bool operator==(const ContactEdge&, const ContactEdge&) = default;
};

struct ContactGraph {
  TileParams params;
  /// K1..K6 = -R, Q1, -P1, R, -Q1, P1.
  std::array<Vec2i, kContactStates> states;
  /// Sorted by (source, a, target).
  std::vector<ContactEdge> edges;
  /// Edge indices leaving each state, in the order of `edges`.
  std::array<std::vector<int>, kContactStates> out;

  /// Index of the state -states[i].
  static int opposite(int i) { return (i + 3) % kContactStates; }
  int state_index(Vec2i s) const;
  /// D[target][source] = number of edges source -> target, so that the
  /// left eigenvector equation reads sum_{s -> t} u_t = beta u_s.
  std::array<std::array<std::int64_t, kContactStates>, kContactStates> incidence() const;
  bool strongly_connected() const;
  /// s -a-> s' present iff -s -(B-1-a)-> -s' present.
  bool flip_symmetric() const;
  int flipped_edge(int edge_index) const;
};

/// Requires 0 < A <= B.
ContactGraph build_contact_graph(const TileParams& params);

struct GifsReport {
  /// successive[k] = max_s d_H(K_s^(k), K_s^(k+1)) for the float iterates.
  std::vector<double> successive;
  /// Final iterates, one point cloud per state.
  std::array<std::vector<std::array<double, 2>>, kContactStates> pieces;
  bool all_nonempty = false;
};

/// Float iteration K_s = U M^-1 (K_s' + a) from a seed box [lo, hi]^2,
/// deduplicating points on a grid of size `resolution`.
GifsReport boundary_gifs_check(const ContactGraph& graph, int depth, double seed_lo = 0.0,
                               double seed_hi = 1.0, double resolution = 1e-3);

struct PerronData {
  std::array<std::array<std::int64_t, kContactStates>, kContactStates> incidence{};
  /// det(x I - D).
  Poly characteristic;
  FieldPtr field;
  QBeta beta;
  std::array<QBeta, kContactStates> u;
};

/// Exact dominant eigenvalue and normalized positive left eigenvector.
PerronData perron_data(const ContactGraph& graph);
/// Re-checks u D = beta u, sum u = 1, u > 0, beta > 1 and
/// minimal(beta) | charpoly(D).
bool verify_perron(const PerronData& data);

/// Walk (i; o_1 o_2 ...) in the ordered graph: 1-based start state and 1-based
/// edge order letters, as a finite prefix followed by an optional period.
struct Walk {
  int start_state = 1;
  std::vector<int> prefix;
  std::vector<int> period;

  bool infinite() const { return !period.empty(); }
  /// "5;2,(6)" or "3;2,1,3,(2)"; finite walks have no parenthesized group.
  std::string str() const;
  static Walk parse(std::string_view text);
  friend bool operator==(const Walk&, const Walk&) = default;
};

struct OrderedContactGraph {
  ContactGraph graph;
  /// order[i][k] = index into graph.edges of letter k+1 at state i.
  std::array<std::vector<int>, kContactStates> order;
  /// psi(i+1; 1 1 1 ...) for each state.
  std::array<RationalPoint, kContactStates> first;

  std::size_t out_degree(int state) const { return order[static_cast<std::size_t>(state)].size(); }
  /// Letter is 1-based; throws OutOfRange when invalid.
  const ContactEdge& edge(int state, int letter) const;
};

/// Backtracking search for an edge order satisfying the continuity and
/// closure constraints exactly.
OrderedContactGraph derive_order_extension(const ContactGraph& graph);

/// Every consistent order (each state's edge order list), used for
/// diagnostics and tests. `flip_seeded` restricts to flip-compatible first
/// edges.
std::vector<std::array<std::vector<int>, kContactStates>> consistent_orders(
    const ContactGraph& graph, bool flip_seeded);

/// Re-checks the continuity and closure equalities of an order.
bool verify_order(const OrderedContactGraph& ordered);

/// Digits read along an eventually periodic walk.
Address psi(const Walk& walk, const OrderedContactGraph& ordered);
/// Digits of a finite walk.
DigitWord walk_digits(const Walk& walk, const OrderedContactGraph& ordered);

}  // namespace tiletopo
