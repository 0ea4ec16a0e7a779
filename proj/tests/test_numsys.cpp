#include "tiletopo/errors.hpp"
#include "tiletopo/numsys.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

using namespace tiletopo;

namespace {

// Independent oracle: partial sums sum_{i<=depth} M^-i (a_i, 0) in double.
std::array<double, 2> series_value(const Address& addr, const TileParams& p, int depth) {
  const double a = static_cast<double>(p.a);
  const double b = static_cast<double>(p.b);
  // M^-1 = (1/B) [[-A, B], [-1, 0]]
  double m00 = -a / b, m01 = 1.0, m10 = -1.0 / b, m11 = 0.0;
  double k00 = 1, k01 = 0, k10 = 0, k11 = 1;  // running M^-i
  double x = 0, y = 0;
  for (int i = 0; i < depth; ++i) {
    double n00 = k00 * m00 + k01 * m10, n01 = k00 * m01 + k01 * m11;
    double n10 = k10 * m00 + k11 * m10, n11 = k10 * m01 + k11 * m11;
    k00 = n00; k01 = n01; k10 = n10; k11 = n11;
    double d = addr.digit_at(static_cast<std::size_t>(i));
    x += k00 * d;
    y += k10 * d;
  }
  return {x, y};
}

Address random_address(std::mt19937& rng, const TileParams& p) {
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> plen(1, 3);
  std::uniform_int_distribution<int> dig(0, static_cast<int>(p.b - 1));
  DigitWord pre(static_cast<std::size_t>(len(rng)));
  DigitWord per(static_cast<std::size_t>(plen(rng)));
  for (auto& d : pre) d = dig(rng);
  for (auto& d : per) d = dig(rng);
  return Address::fractional(pre, per);
}

RationalPoint pt(long xn, long xd, long yn, long yd) {
  return {Rational(xn, xd), Rational(yn, yd)};
}

}  // namespace

TEST(Address, CanonicalizesPeriodAndPreperiod) {
  Address a = Address::fractional({2, 2}, {2, 2});
  EXPECT_EQ(a.preperiod(), DigitWord{});
  EXPECT_EQ(a.period(), DigitWord{2});
  Address b = Address::fractional({4, 4, 0}, {4, 0});
  EXPECT_EQ(b.str(), "4(40)");
  Address c = Address::fractional({1, 0, 4, 0}, {4, 0, 4, 0});
  EXPECT_EQ(c.str(), "1(04)");
}

TEST(Address, ParseAndFormatRoundTrip) {
  for (const char* text : {"440(04)", "(2)", "12.3(0)", "1[10,11](0)", "[11](3[10])"}) {
    Address a = Address::parse(text);
    EXPECT_EQ(Address::parse(a.str()), a) << text;
  }
  EXPECT_EQ(Address::parse("0.440(04)").str(), "440(04)");
  EXPECT_EQ(Address::parse("1[10,11](0)").preperiod(), (DigitWord{1, 10, 11}));
  EXPECT_THROW(Address::parse("44"), TileError);
  EXPECT_THROW(Address::parse("4()"), TileError);
  EXPECT_THROW(Address::parse("4(1)x"), TileError);
  EXPECT_THROW(Address::parse("[1,](1)"), TileError);
}

TEST(PointEval, ZeroAddressIsOrigin) {
  auto p = TileParams::make(4, 5);
  EXPECT_EQ(point_eval(Address::parse("(0)"), p), RationalPoint{});
}

TEST(PointEval, FiveFiveTwoBar) {
  auto p = TileParams::make(5, 5);
  RationalPoint v = point_eval(Address::parse("(2)"), p);
  EXPECT_EQ(v, pt(-12, 11, -2, 11));
  // M^-1 has the real eigenvalue 2/(5-sqrt5) ~ 0.72, so the depth-60 tail is
  // still ~5e-9; depth 120 brings it below 1e-12.
  auto s = series_value(Address::parse("(2)"), p, 120);
  EXPECT_NEAR(s[0], to_double(v.x), 1e-12);
  EXPECT_NEAR(s[1], to_double(v.y), 1e-12);
  auto s60 = series_value(Address::parse("(2)"), p, 60);
  EXPECT_NEAR(s60[0], to_double(v.x), 1e-8);
  EXPECT_NEAR(s60[1], to_double(v.y), 1e-8);
}

TEST(PointEval, AgreesWithSeriesOnRandomAddresses) {
  std::mt19937 rng(7);
  for (auto [a, b] : {std::pair{2, 2}, {4, 5}, {5, 5}, {7, 9}, {3, 12}}) {
    auto p = TileParams::make(a, b);
    for (int k = 0; k < 40; ++k) {
      Address addr = random_address(rng, p);
      RationalPoint v = point_eval(addr, p);
      auto s = series_value(addr, p, 200);
      EXPECT_NEAR(s[0], to_double(v.x), 1e-9) << addr.str();
      EXPECT_NEAR(s[1], to_double(v.y), 1e-9) << addr.str();
    }
  }
}

TEST(PointEval, SymmetryCenterFourFive) {
  auto p = TileParams::make(4, 5);
  RationalPoint half = Rational(1, 2) * point_eval(Address::parse("(4)"), p);
  EXPECT_EQ(half, point_eval(Address::parse("(2)"), p));
}

TEST(PointEval, IntegerPartAddsLatticePoint) {
  auto p = TileParams::make(4, 5);
  // 1.(0) = (1,0); 10.(0) = M e1 = (0,1)
  EXPECT_EQ(point_eval(Address::parse("1.(0)"), p), pt(1, 1, 0, 1));
  EXPECT_EQ(point_eval(Address::parse("10.(0)"), p), pt(0, 1, 1, 1));
}

TEST(PointEval, RejectsOutOfRangeDigits) {
  auto p = TileParams::make(4, 5);
  EXPECT_THROW(point_eval(Address::parse("(5)"), p), TileError);
}

TEST(Flip, Examples) {
  auto p = TileParams::make(4, 5);
  EXPECT_EQ(flip(Address::parse("440(04)"), p), Address::parse("004(40)"));
  EXPECT_EQ(flip(Address::parse("(2)"), p), Address::parse("(2)"));
}

TEST(Flip, ReflectionIdentity) {
  std::mt19937 rng(11);
  for (auto [a, b] : {std::pair{2, 2}, {4, 5}, {5, 5}, {6, 9}, {8, 11}}) {
    auto p = TileParams::make(a, b);
    RationalPoint top = point_eval(Address::fractional({}, {p.max_digit()}), p);
    for (int k = 0; k < 100; ++k) {
      Address addr = random_address(rng, p);
      EXPECT_EQ(point_eval(flip(addr, p), p), top - point_eval(addr, p)) << addr.str();
    }
  }
}

TEST(AltFlip, Examples) {
  auto p7 = TileParams::make(5, 7);
  EXPECT_EQ(alt_flip(0, 3, p7), 3);
  EXPECT_EQ(alt_flip(1, 3, p7), 3);
  auto p5 = TileParams::make(4, 5);
  EXPECT_EQ(alt_flip(1, 0, p5), 4);
  EXPECT_EQ(alt_flip(2, 1, p5), 1);
  EXPECT_THROW(alt_flip(0, 5, p5), TileError);
}

TEST(Contraction, FixedPointsAndPrefixShift) {
  auto p = TileParams::make(4, 5);
  EXPECT_EQ(apply_contraction(0, RationalPoint{}, p), RationalPoint{});
  RationalPoint c = point_eval(Address::parse("(2)"), p);
  EXPECT_EQ(apply_contraction(2, c, p), c);

  std::mt19937 rng(3);
  for (auto [a, b] : {std::pair{2, 2}, {4, 5}, {5, 5}, {9, 12}}) {
    auto q = TileParams::make(a, b);
    std::uniform_int_distribution<int> dig(0, static_cast<int>(b - 1));
    for (int k = 0; k < 100; ++k) {
      Address w = random_address(rng, q);
      Digit d = dig(rng);
      EXPECT_EQ(point_eval(w.prepend(d), q), apply_contraction(d, point_eval(w, q), q));
    }
  }
}

TEST(EqPoints, DualAddressesAgreeInRegimeThree) {
  std::mt19937 rng(19);
  for (auto [a, b] : {std::pair{4, 5}, {5, 7}, {6, 9}, {7, 11}}) {
    auto p = TileParams::make(a, b);
    const Digit top = p.max_digit();
    int checked = 0;
    std::uniform_int_distribution<int> dig(0, top);
    while (checked < 100) {
      DigitWord v{dig(rng), dig(rng), dig(rng)};
      DigitWord u{v[0] + 1, v[1] + static_cast<Digit>(a - 2), v[2] - 1};
      if (!p.is_digit(u[0]) || !p.is_digit(u[1]) || !p.is_digit(u[2])) continue;
      EXPECT_EQ(point_eval(Address::fractional(u, {0, top}), p),
                point_eval(Address::fractional(v, {top, 0}), p));
      ++checked;
    }
  }
}

TEST(Normalize, CompanionInputIsUnchanged) {
  auto [params, aff] = normalize({{0, -5, 1, -5}, {1, 0}});
  EXPECT_EQ(params, TileParams::make(5, 5));
  EXPECT_EQ(aff.basis_change, IntMatrix2::identity());
  EXPECT_FALSE(params.reflected);
  EXPECT_TRUE(verify_normalization({{0, -5, 1, -5}, {1, 0}}, params, aff));
}

TEST(Normalize, NegativeTraceIsReflected) {
  RawInstance raw{{0, -5, 1, 4}, {1, 0}};
  auto [params, aff] = normalize(raw);
  EXPECT_EQ(params.a, 4);
  EXPECT_EQ(params.b, 5);
  EXPECT_TRUE(params.reflected);
  EXPECT_TRUE(verify_normalization(raw, params, aff));
  // Oracle: partial sums of sum_{i>=0} M2^{-2i-1} (4,0) to depth 60.
  const double b = 5, a2 = -4;  // M2 = [[0,-5],[1,4]], A2 = -4
  double m00 = -a2 / b, m01 = 1, m10 = -1 / b, m11 = 0;
  double sq00 = m00 * m00 + m01 * m10, sq01 = m00 * m01 + m01 * m11;
  double sq10 = m10 * m00 + m11 * m10, sq11 = m10 * m01 + m11 * m11;
  double k00 = m00, k01 = m01, k10 = m10, k11 = m11;
  double x = 0, y = 0;
  for (int i = 0; i < 60; ++i) {
    x += k00 * 4;
    y += k10 * 4;
    double n00 = k00 * sq00 + k01 * sq10, n01 = k00 * sq01 + k01 * sq11;
    double n10 = k10 * sq00 + k11 * sq10, n11 = k10 * sq01 + k11 * sq11;
    k00 = n00; k01 = n01; k10 = n10; k11 = n11;
  }
  EXPECT_NEAR(to_double(aff.translation.x), x, 1e-12);
  EXPECT_NEAR(to_double(aff.translation.y), y, 1e-12);
}

TEST(Normalize, ReflectedTilePointsMatchRawTile) {
  // A raw-companion point with digits a_i is P (normalized point with digits
  // a_i^{(i)}, i 1-based) + translation. Checked exactly on random periodic addresses of even period.
  RawInstance raw{{0, -5, 1, 4}, {1, 0}};
  auto [params, aff] = normalize(raw);
  RationalMatrix2 m2 = to_rational(raw.m0);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dig(0, 4);
  for (int k = 0; k < 50; ++k) {
    DigitWord pre(2), per(2);
    for (auto& d : pre) d = dig(rng);
    for (auto& d : per) d = dig(rng);
    Address raw_addr = Address::fractional(pre, per);
    DigitWord fpre = pre, fper = per;
    for (std::size_t i = 0; i < 2; ++i) {
      fpre[i] = alt_flip(static_cast<std::int64_t>(i + 1), pre[i], params);
      fper[i] = alt_flip(static_cast<std::int64_t>(i + 1), per[i], params);
    }
    RationalPoint lhs = eval_address(raw_addr, m2);
    RationalPoint rhs = map_to_raw(point_eval(Address::fractional(fpre, fper), params), aff);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Normalize, GeneralBasisChange) {
  RawInstance raw{{0, -2, 1, -2}, {0, 1}};
  auto [params, aff] = normalize(raw);
  EXPECT_EQ(params, TileParams::make(2, 2));
  EXPECT_EQ(aff.basis_change, (IntMatrix2{0, -2, 1, -2}));
  // Oracle: C^-1 M0 C equals the companion matrix.
  RationalMatrix2 c = to_rational(aff.basis_change);
  EXPECT_EQ(inverse(c) * to_rational(raw.m0) * c, params.matrix());
  // Digit images: C (d, 0) = d v.
  for (std::int64_t d = 0; d < 2; ++d) {
    EXPECT_EQ(apply(aff.basis_change, Vec2i{d, 0}), (Vec2i{d * raw.v.x, d * raw.v.y}));
  }
}

TEST(Normalize, Errors) {
  try {
    normalize({{0, -5, 1, -6}, {1, 0}});
    FAIL();
  } catch (const TileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotExpanding);
  }
  try {
    normalize({{1, 0, 0, 1}, {1, 0}});
    FAIL();
  } catch (const TileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadDeterminant);
  }
  try {
    normalize({{2, 0, 0, 2}, {1, 0}});
    FAIL();
  } catch (const TileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateBasis);
  }
}

TEST(Normalize, ZeroTraceIsAccepted) {
  auto [params, aff] = normalize({{0, -3, 1, 0}, {1, 0}});
  EXPECT_EQ(params.a, 0);
  EXPECT_FALSE(params.reflected);
}
