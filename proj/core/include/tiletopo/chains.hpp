#pragma once

// The curves alpha_1..alpha_B along the bottom of the boundary (case
// 2A-B = 3, A != B), their flips alpha_i', the arcs gamma_i and the
// mechanized chain checks built on the product automaton of topology.hpp.

#include "tiletopo/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tiletopo {

/// Endpoint walk pairs (s_i, t_i), i = 1..B, in the ordered contact graph.
/// Throws WrongRegime unless 2A-B = 3 and A != B.
std::vector<std::pair<Walk, Walk>> alpha_table(const TileParams& params);

struct AlphaCurve {
  int index = 0;  ///< 1..B
  bool flipped = false;
  Walk s_walk;
  Walk t_walk;
  /// s and t in lexicographic order.
  Walk lo;
  Walk hi;
  Address s_address;
  Address t_address;
  /// Addresses psi(w) of every walk w between lo and hi.
  DigitAutomaton language;

  std::string name() const;
};

struct CurveSystem {
  TileParams params;
  OrderedContactGraph ordered;
  NeighborSet neighbors;
  std::vector<AlphaCurve> alpha;        ///< alpha_1..alpha_B
  std::vector<AlphaCurve> alpha_prime;  ///< alpha_1'..alpha_B', by digit flip
};

/// Walk (i; o...) -> (i+3 mod 6; o...), the state swap K1<->K4, K2<->K5, K3<->K6.
Walk swap_states(const Walk& walk);

AlphaCurve alpha_curve(const OrderedContactGraph& ordered, int index, const Walk& s, const Walk& t);
/// Digit flip a -> B-1-a of the language; walks are state swapped.
AlphaCurve flip_curve(const AlphaCurve& curve, const OrderedContactGraph& ordered);

CurveSystem build_curve_system(const TileParams& params);

/// The flipped languages against the lex intervals of the state-swapped
/// walks, plus the reflection of endpoint values through 0.(B-1).
struct FlipCoherence {
  bool languages_agree = true;
  bool endpoints_reflect = true;
  bool ok() const { return languages_agree && endpoints_reflect; }
};
FlipCoherence check_flip_coherence(const CurveSystem& system);

/// Every alpha language is inside the boundary language of G.
bool alpha_languages_in_boundary(const CurveSystem& system);

struct ChainEntry {
  IntersectionKind kind = IntersectionKind::Empty;
  std::vector<RationalPoint> points;
  /// First run, when there is one.
  std::optional<IntersectionRun> witness;
};

struct ChainReport {
  std::vector<std::string> names;
  bool circular = false;
  /// matrix[i][j] for i < j; the diagonal and lower half stay default.
  std::vector<std::vector<ChainEntry>> matrix;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  /// The common point of each adjacent pair, in chain order.
  std::vector<RationalPoint> junctions;
};

/// Pairwise intersections with the chain (or circular chain) pattern
/// checked: adjacent pairs meet in one point, all others are empty.
ChainReport chain_report(const std::vector<AlphaCurve>& curves, const TileParams& params,
                         const NeighborSet& set, bool circular);

/// alpha_1..alpha_B, with the junction values of expected_junction. Throws
/// ChainViolation.
ChainReport verify_chain(const CurveSystem& system);
/// alpha_1'..alpha_B'.
ChainReport verify_prime_chain(const CurveSystem& system);
/// alpha_1..alpha_B, alpha_1'..alpha_B' as a circular chain.
ChainReport verify_circular_chain(const CurveSystem& system);

/// Expected junction of curve k and curve k+1 in the circular order
/// (k = 0..2B-1), as a list of addresses of that one point.
std::vector<Address> expected_junction(const TileParams& params, int k);

struct GammaArc {
  int index = 0;  ///< 1..B-2
  /// i (alpha_{B-1} u alpha_B with the leading B-1 removed).
  DigitAutomaton language;
  Address first_end;   ///< 0.i(A-2)(B-2)(0(B-1))
  Address second_end;  ///< 0.i(B-1)0(0(B-1))
  Address through;     ///< 0.i(A-2)
};

struct ContainmentFact {
  std::string text;  ///< "0.2[K2] < K5"
  bool holds = false;
};

struct GammaReport {
  std::vector<GammaArc> arcs;
  std::vector<ContainmentFact> facts;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Builds gamma_1..gamma_{B-2} and checks the endpoints, the point
/// 0.i(A-2) and the containments in G. `junctions` are the values of the
/// verified circular chain; every endpoint must be one of them.
GammaReport gamma_arcs(const CurveSystem& system, const std::vector<RationalPoint>& junctions);

struct SymmetryReport {
  RationalPoint center;  ///< S = 0.(A-2)
  std::vector<RationalPoint> p;  ///< P_i = 0.i(A-2), i = 0..B-1
};
/// Throws IdentityFailure.
SymmetryReport symmetry_and_junctions(const CurveSystem& system);

/// Exhaustive check of the subdivision intersection rules at depths 1 to 4
/// for the regime 2A-B = 3.
struct SubdivisionReplay {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
SubdivisionReplay replay_subdivision_rules(const TileParams& params);

/// Language of the explicit description of alpha_i (or alpha_i') as unions of
/// cylinders 0.w[K], each K read as a G-language; loops are unrolled up to
/// `unroll` repetitions and the limit words added as singletons.
/// For alpha_{B-1} the families 0.(B-1)(A-2)(B-A+1)((A-2)(B-A+1))^p k[...]
/// are listed from p = 1; `zero_repetition_tail` also adds p = 0, which the
/// walk interval needs.
DigitAutomaton alpha_description(const CurveSystem& system, int index, bool flipped, int unroll,
                                 bool zero_repetition_tail = false);
/// Length-`depth` prefixes of the curve language and the description agree.
bool replay_alpha_description(const CurveSystem& system, int index, bool flipped, std::size_t depth,
                              bool zero_repetition_tail = false);

}  // namespace tiletopo
