#pragma once

// Boundary parametrization C = psi o phi: a Dumont-Thomas type expansion of
// t in [0, 1] selects a walk in the ordered contact graph, whose digits give
// the boundary point. Also the polygonal approximations of the boundary.

#include "tiletopo/contact_graph.hpp"

#include <cstddef>
#include <vector>

namespace tiletopo {

class Parametrization {
 public:
  Parametrization(OrderedContactGraph ordered, PerronData perron);

  const OrderedContactGraph& ordered() const { return ordered_; }
  const PerronData& perron() const { return perron_; }
  const TileParams& params() const { return ordered_.graph.params; }

  /// Greedy walk of t. Points on a subdivision boundary take the maximal walk
  /// of the left interval. Throws NonPeriodicWalk when no cycle appears within
  /// `max_steps` letters.
  Walk param_to_walk(const QBeta& t, std::size_t max_steps = 20000) const;
  /// Left end of the cylinder of a finite walk, or the exact value of an
  /// eventually periodic walk.
  QBeta walk_to_param(const Walk& walk) const;
  RationalPoint boundary_point(const QBeta& t) const;

  /// Start of the parameter interval of state i (0-based).
  const QBeta& state_offset(int state) const { return state_offset_[static_cast<std::size_t>(state)]; }
  /// Offset of letter k (1-based) inside state i, before scaling by the state.
  const QBeta& letter_offset(int state, int letter) const;

 private:
  OrderedContactGraph ordered_;
  PerronData perron_;
  QBeta beta_inv_;
  std::array<QBeta, kContactStates + 1> state_offset_;
  std::array<std::vector<QBeta>, kContactStates> letter_offset_;  // size out_degree + 1
};

/// Number of walks of length n summed over the six start states.
BigInt count_walks(const ContactGraph& graph, int n);

/// All walks of length n, in lexicographic order.
std::vector<Walk> walks_of_length(const OrderedContactGraph& ordered, int n);

struct BoundaryApproximation {
  /// psi(w & 1 1 1 ...) over length-n walks w in lex order, consecutive
  /// duplicates (cyclically) merged.
  std::vector<RationalPoint> vertices;
  /// Number of walks visited, i.e. vertices before merging.
  std::size_t walk_count = 0;
};

/// Throws BudgetExceeded when the number of length-n walks exceeds `budget`.
BoundaryApproximation approx_boundary(int n, const OrderedContactGraph& ordered,
                                      std::size_t budget = 1000000);

}  // namespace tiletopo
