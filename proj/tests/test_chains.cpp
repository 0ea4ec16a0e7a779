#include "tiletopo/chains.hpp"
#include "tiletopo/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <set>

using namespace tiletopo;

namespace {

const CurveSystem& system45() {
  static const auto sys = std::make_unique<CurveSystem>(build_curve_system(TileParams::make(4, 5)));
  return *sys;
}

const CurveSystem& system57() {
  static const auto sys = std::make_unique<CurveSystem>(build_curve_system(TileParams::make(5, 7)));
  return *sys;
}

std::set<std::string> endpoint_texts(const AlphaCurve& c) { return {c.s_address.str(), c.t_address.str()}; }

}  // namespace

TEST(AlphaTable, EndpointsForFourFive) {
  const auto& sys = system45();
  ASSERT_EQ(sys.alpha.size(), 5u);
  EXPECT_EQ(endpoint_texts(sys.alpha[4]), (std::set<std::string>{"440(04)", "4(2)"}));
  EXPECT_EQ(sys.alpha[3].s_address.str(), "4(2)");
  EXPECT_EQ(sys.alpha[0].name(), "alpha_1");
  EXPECT_EQ(sys.alpha_prime[2].name(), "alpha_3'");
}

TEST(AlphaTable, FirstCurveOfFiveSeven) {
  EXPECT_EQ(system57().alpha[0].s_address.str(), "106(60)");
}

TEST(AlphaTable, WrongRegime) {
  for (auto [a, b] : {std::pair{3, 3}, {5, 5}, {2, 2}}) {
    try {
      alpha_table(TileParams::make(a, b));
      FAIL() << a << "," << b;
    } catch (const TileError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::WrongRegime);
    }
  }
}

TEST(AlphaCurves, LanguagesContainEndpointsAndLieInBoundary) {
  for (const CurveSystem* sys : {&system45(), &system57()}) {
    for (const auto* family : {&sys->alpha, &sys->alpha_prime}) {
      for (const auto& c : *family) {
        EXPECT_TRUE(c.language.accepts(c.s_address)) << c.name();
        EXPECT_TRUE(c.language.accepts(c.t_address)) << c.name();
        EXPECT_LE(compare_walks(c.lo, c.hi), 0);
      }
    }
    EXPECT_TRUE(alpha_languages_in_boundary(*sys));
    EXPECT_TRUE(check_flip_coherence(*sys).ok());
  }
  EXPECT_TRUE(system45().alpha[0].language.accepts(Address::parse("0.104(40)")));
}

TEST(AlphaCurves, FlippedEndpointsReflect) {
  const auto& sys = system45();
  const auto& p = sys.params;
  const RationalPoint full = point_eval(Address::parse("0.(4)"), p);
  for (std::size_t k = 0; k < sys.alpha.size(); ++k) {
    const auto& c = sys.alpha[k];
    const auto& f = sys.alpha_prime[k];
    EXPECT_EQ(point_eval(c.s_address, p) + point_eval(f.s_address, p), full);
    EXPECT_EQ(point_eval(c.t_address, p) + point_eval(f.t_address, p), full);
  }
}

TEST(Chains, FourFive) {
  const auto& sys = system45();
  const auto r = verify_chain(sys);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.junctions.size(), 4u);
  // alpha_1 and alpha_2 meet in one point, alpha_1 and alpha_3 not at all.
  EXPECT_EQ(r.matrix[0][1].kind, IntersectionKind::UniquePoint);
  EXPECT_EQ(r.matrix[0][2].kind, IntersectionKind::Empty);
  EXPECT_EQ(r.matrix[0][1].points[0], point_eval(Address::parse("0.104(40)"), sys.params));
  EXPECT_TRUE(verify_prime_chain(sys).ok());
}

TEST(Chains, CircularFourFiveAndFiveSeven) {
  for (const CurveSystem* sys : {&system45(), &system57()}) {
    const auto r = verify_circular_chain(*sys);
    const std::size_t n = 2 * static_cast<std::size_t>(sys->params.b);
    EXPECT_TRUE(r.circular);
    EXPECT_EQ(r.names.size(), n);
    ASSERT_EQ(r.junctions.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
        EXPECT_EQ(r.matrix[i][j].kind, adjacent ? IntersectionKind::UniquePoint : IntersectionKind::Empty)
            << r.names[i] << " " << r.names[j];
      }
    }
  }
}

TEST(Chains, JunctionAddressesAgree) {
  for (const CurveSystem* sys : {&system45(), &system57()}) {
    const auto r = verify_circular_chain(*sys);
    for (int k = 0; k < 2 * static_cast<int>(sys->params.b); ++k) {
      const auto addrs = expected_junction(sys->params, k);
      ASSERT_FALSE(addrs.empty());
      for (const auto& a : addrs) EXPECT_EQ(point_eval(a, sys->params), r.junctions[static_cast<std::size_t>(k)]) << k;
    }
  }
}

TEST(Chains, ReportWithoutThrowFlagsBrokenPattern) {
  // alpha_1, alpha_3, alpha_2 is not a chain: alpha_1 and alpha_3 do not meet.
  const auto& sys = system45();
  const auto r = chain_report({sys.alpha[0], sys.alpha[2], sys.alpha[1]}, sys.params, sys.neighbors, false);
  EXPECT_FALSE(r.ok());
}

TEST(Gamma, ArcsAndFacts) {
  const auto& sys = system45();
  const auto circ = verify_circular_chain(sys);
  const auto g = gamma_arcs(sys, circ.junctions);
  EXPECT_TRUE(g.ok());
  EXPECT_EQ(g.arcs.size(), 3u);
  for (const auto& f : g.facts) EXPECT_TRUE(f.holds) << f.text;
  EXPECT_TRUE(g.arcs[0].language.accepts(Address::parse("0.1(2)")));
  EXPECT_EQ(g.arcs[1].through.str(), "(2)");  // 0.2(2) in canonical form
}

TEST(Symmetry, Centers) {
  const auto s45 = symmetry_and_junctions(system45());
  EXPECT_EQ(s45.center, point_eval(Address::parse("0.(2)"), system45().params));
  EXPECT_EQ(s45.center, Rational(1, 2) * point_eval(Address::parse("0.(4)"), system45().params));
  EXPECT_EQ(s45.p.size(), 5u);
  const auto s57 = symmetry_and_junctions(system57());
  EXPECT_EQ(s57.center, point_eval(Address::parse("0.(3)"), system57().params));
}

TEST(SubdivisionRules, FourFive) {
  const auto r = replay_subdivision_rules(TileParams::make(4, 5));
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.cases, 1000u);
}

TEST(Description, MatchesCurvesUpToTheTailCase) {
  const auto& sys = system45();
  const int b = static_cast<int>(sys.params.b);
  for (int i = 1; i <= b; ++i) {
    for (bool flipped : {false, true}) {
      const bool tail = i == b - 1;
      if (!tail) EXPECT_TRUE(replay_alpha_description(sys, i, flipped, 4)) << i << flipped;
      EXPECT_TRUE(replay_alpha_description(sys, i, flipped, 4, true)) << i << flipped;
    }
  }
  // Without the p = 0 family, alpha_{B-1} misses words such as 0.4221... at (4,5).
  EXPECT_FALSE(replay_alpha_description(sys, b - 1, false, 4));
  EXPECT_FALSE(replay_alpha_description(sys, b - 1, true, 4));
}
