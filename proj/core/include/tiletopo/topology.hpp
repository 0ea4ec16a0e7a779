#pragma once

// Classification of (A, B), the lexicographic halves D1 and D2 of the tile,
// and the product automaton deciding which addresses of two digit languages
// denote the same point.

#include "tiletopo/automaton.hpp"
#include "tiletopo/neighbors.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tiletopo {

enum class Classification {
  DiskLike,
  NoCutPointInteriorDisconnected,
  HasCutPoint,
  DegenerateRectangle,
  SquareSpecialCase,
};

std::string_view to_string(Classification c);
Classification classify(const TileParams& params);

/// 0.((A-3)(B-A+2)) in canonical form. Requires 2A-B >= 5.
Address cut_point_address(const TileParams& params);

/// Comparison of a_1 a_2^(1) a_3 a_4^(1) ... against (A-3)(A-3)... where
/// a^(1) = B-1-a: `upper` false gives D1 (<=), true gives D2 (>=).
struct LexGifs {
  DigitAutomaton automaton;
  bool upper = false;
  Digit even_digit = 0;  ///< A-3, compared at positions 1, 3, 5, ...
  Digit odd_digit = 0;   ///< B-A+2, compared at positions 2, 4, ...
  /// State numbering of `automaton`.
  static constexpr int kTightEven = 0;
  static constexpr int kTightOdd = 1;
  static constexpr int kFree = 2;
};

std::pair<LexGifs, LexGifs> build_d1_d2(const TileParams& params);

enum class IntersectionKind { Empty, UniquePoint, FinitePoints, Branching };
std::string_view to_string(IntersectionKind k);

struct ProductState {
  int q1 = 0;
  int q2 = 0;
  Vec2i s;
  friend auto operator<=>(const ProductState&, const ProductState&) = default;
};

/// Reading a from the first language and a' from the second moves
/// s to M s + (a' - a) e1.
struct ProductTransition {
  int from = 0;
  Digit a = 0;
  Digit a_prime = 0;
  int to = 0;
};

struct IntersectionRun {
  Address x;  ///< address in the first language
  Address y;  ///< address in the second language
  RationalPoint value;
};

struct IntersectionAutomaton {
  /// Live states sorted by (q1, q2, s); transitions sorted by (from, a, a').
  std::vector<ProductState> states;
  std::vector<ProductTransition> transitions;
  int initial = -1;
  std::size_t reachable_states = 0;
  Vec2i start;
  IntersectionKind kind = IntersectionKind::Empty;
  /// Every run when the count is finite; capped by the run limit.
  std::vector<IntersectionRun> runs;
  bool run_limit_hit = false;
  /// Distinct run values, sorted.
  std::vector<RationalPoint> points;
  /// States inside a cycle that have two or more live successors.
  std::vector<int> branching_states;
};

/// Pairs (x in L1, y in L2) with value(x) = value(y) + s0. With s0 = 0 this
/// describes the common points of the two address sets.
IntersectionAutomaton intersect_languages(const DigitAutomaton& l1, const DigitAutomaton& l2,
                                          const TileParams& params, const NeighborSet& set,
                                          Vec2i s0 = {}, std::size_t run_limit = 100000);
IntersectionAutomaton intersect_languages(const DigitAutomaton& l1, const DigitAutomaton& l2,
                                          const TileParams& params, Vec2i s0 = {});

/// Prefix pairs (u, v) of length n of accepted words whose partial difference
/// states all stay in S u {0}.
std::set<std::pair<DigitWord, DigitWord>> reachable_prefix_pairs(const DigitAutomaton& l1,
                                                                const DigitAutomaton& l2,
                                                                const TileParams& params,
                                                                const NeighborSet& set,
                                                                std::size_t n, Vec2i s0 = {});

/// Depth-by-depth replay of the containment I in G_n: every reachable prefix
/// pair of D1 x D2 at depth n+1 consists of words S_n c^(n) with
/// c in {A-4, A-3, A-2}, and its cylinders meet.
struct GnReplay {
  int depth = 0;
  std::vector<std::size_t> pairs_per_depth;
  bool ok = false;
  std::string failure;
};

GnReplay replay_gn(const TileParams& params, int depth);

struct CutPointCertificate {
  TileParams params;
  Address z;
  RationalPoint value;
  IntersectionAutomaton automaton;
  bool union_universal = false;
  GnReplay replay;
};

/// Throws WrongRegime outside 2A-B >= 5 and CertificateFailure when a check fails.
CutPointCertificate verify_cut_point(const TileParams& params, int replay_depth = 12);

}  // namespace tiletopo
