#include "tiletopo/errors.hpp"
#include "tiletopo/topology.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace tiletopo;

namespace {

// Documented thresholds, written out independently of classify().
Classification expected_class(std::int64_t a, std::int64_t b) {
  if (a == 0) return Classification::DegenerateRectangle;
  if (a == 4 && b == 4) return Classification::SquareSpecialCase;
  const std::int64_t r = 2 * a - b;
  if (r <= 2) return Classification::DiskLike;
  if (r <= 4) return Classification::NoCutPointInteriorDisconnected;
  return Classification::HasCutPoint;
}

}  // namespace

TEST(Classify, Grid) {
  for (std::int64_t b = 2; b <= 12; ++b) {
    for (std::int64_t a = 0; a <= b; ++a) {
      EXPECT_EQ(classify(TileParams::make(a, b)), expected_class(a, b)) << a << "," << b;
    }
  }
  EXPECT_EQ(to_string(Classification::HasCutPoint), "HasCutPoint");
}

TEST(CutPoint, Addresses) {
  EXPECT_EQ(cut_point_address(TileParams::make(5, 5)).str(), "(2)");
  EXPECT_EQ(cut_point_address(TileParams::make(6, 6)).str(), "(32)");
  EXPECT_EQ(cut_point_address(TileParams::make(6, 7)).str(), "(3)");
  EXPECT_THROW(cut_point_address(TileParams::make(4, 5)), TileError);
}

TEST(CutPoint, FiveFiveValueSolvesFixedPointEquation) {
  const auto p = TileParams::make(5, 5);
  const auto cert = verify_cut_point(p);
  // x = sum_k M^-k (2,0): (M - I) x = (2, 0) by Cramer's rule.
  const Rational a(0 - 1), b(-5), c(1), d(-5 - 1);
  const Rational det = a * d - b * c;
  const RationalPoint x{(Rational(2) * d) / det, (-c * Rational(2)) / det};
  EXPECT_EQ(cert.value, x);
  // Float partial sums of the series.
  double vx = 0, vy = 0, px = 1, py = 0;  // current M^-k e1 times 2
  const double inv[2][2] = {{-5.0 / 5, 5.0 / 5}, {-1.0 / 5, 0}};  // M^-1 = [[-A, B], [-1, 0]] / B
  for (int k = 0; k < 400; ++k) {
    const double nx = inv[0][0] * px + inv[0][1] * py, ny = inv[1][0] * px + inv[1][1] * py;
    px = nx;
    py = ny;
    vx += 2 * px;
    vy += 2 * py;
  }
  EXPECT_NEAR(vx, to_double(x.x), 1e-9);
  EXPECT_NEAR(vy, to_double(x.y), 1e-9);
}

TEST(CutPoint, CertificatesForEveryQualifyingPair) {
  for (std::int64_t b = 2; b <= 12; ++b) {
    for (std::int64_t a = 1; a <= b; ++a) {
      const auto p = TileParams::make(a, b);
      if (p.regime() < 5) continue;
      const auto cert = verify_cut_point(p);
      EXPECT_EQ(cert.automaton.kind, IntersectionKind::UniquePoint) << a << "," << b;
      ASSERT_EQ(cert.automaton.points.size(), 1u);
      EXPECT_EQ(cert.automaton.points[0], point_eval(cert.z, p));
      EXPECT_TRUE(cert.union_universal);
      EXPECT_TRUE(cert.replay.ok) << cert.replay.failure;
      for (std::size_t n : cert.replay.pairs_per_depth) EXPECT_EQ(n, 3u);
    }
  }
}

TEST(CutPoint, WrongRegimeRejected) {
  try {
    verify_cut_point(TileParams::make(4, 5));
    FAIL();
  } catch (const TileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongRegime);
  }
}

TEST(LexHalves, UnionUniversalAndMeetInTheThreshold) {
  for (auto [a, b] : {std::pair{5, 5}, {6, 7}, {9, 12}}) {
    const auto p = TileParams::make(a, b);
    const auto [d1, d2] = build_d1_d2(p);
    EXPECT_TRUE(unite(d1.automaton, d2.automaton).is_universal());
    EXPECT_TRUE(equivalent(intersect(d1.automaton, d2.automaton),
                           DigitAutomaton::singleton(cut_point_address(p), static_cast<int>(b))));
    EXPECT_EQ(d1.even_digit, a - 3);
    EXPECT_EQ(d2.odd_digit, b - a + 2);
  }
}

TEST(LexHalves, DirectComparison) {
  const auto p = TileParams::make(5, 5);
  const auto [d1, d2] = build_d1_d2(p);
  // First digit below A-3 = 2: only D1.
  EXPECT_TRUE(d1.automaton.accepts(Address::parse("0.1(4)")));
  EXPECT_FALSE(d2.automaton.accepts(Address::parse("0.1(4)")));
  // Tie at position 1, then a2 = 0 so B-1-a2 = 4 > 2: only D2.
  EXPECT_TRUE(d2.automaton.accepts(Address::parse("0.20(0)")));
  EXPECT_FALSE(d1.automaton.accepts(Address::parse("0.20(0)")));
}

TEST(ProductAutomaton, DisjointAndTouchingCylinders) {
  const auto p = TileParams::make(4, 5);
  const auto set = neighbor_set_formula(p);
  const auto c0 = DigitAutomaton::cylinder({0}, 5), c1 = DigitAutomaton::cylinder({1}, 5),
             c3 = DigitAutomaton::cylinder({3}, 5);
  EXPECT_EQ(intersect_languages(c0, c3, p, set).kind, IntersectionKind::Empty);
  EXPECT_EQ(intersect_languages(c0, c1, p, set).kind, IntersectionKind::Branching);
}

TEST(ProductAutomaton, DualAddressesGiveUniquePoint) {
  const auto p = TileParams::make(4, 5);
  const auto x = DigitAutomaton::singleton(Address::parse("0.223(04)"), 5);
  const auto y = DigitAutomaton::singleton(Address::parse("0.104(40)"), 5);
  const auto r = intersect_languages(x, y, p);
  EXPECT_EQ(r.kind, IntersectionKind::UniquePoint);
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_EQ(r.points[0], point_eval(Address::parse("0.223(04)"), p));
  EXPECT_EQ(point_eval(Address::parse("0.223(04)"), p), point_eval(Address::parse("0.104(40)"), p));
}

TEST(ProductAutomaton, TranslatedTileMeetsOnlyNeighbors) {
  const auto p = TileParams::make(2, 2);
  const auto set = neighbor_set_formula(p);
  const auto full = DigitAutomaton::full(2);
  for (Vec2i s : set.members) EXPECT_NE(intersect_languages(full, full, p, set, s).kind, IntersectionKind::Empty);
  EXPECT_EQ(intersect_languages(full, full, p, set, Vec2i{3, 0}).kind, IntersectionKind::Empty);
}

TEST(GnReplay, PrefixPairsFollowThreshold) {
  const auto r = replay_gn(TileParams::make(5, 5), 12);
  EXPECT_TRUE(r.ok) << r.failure;
  EXPECT_EQ(r.pairs_per_depth.size(), 13u);  // depths 0..12
}
