#pragma once

// Exact scalar, vector and 2x2 matrix types shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace tiletopo {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);
double to_double(const Rational& q);

/// Small integer lattice vector. Used for neighbor vectors and automaton
/// difference states, which stay inside a bounded ball.
struct Vec2i {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr Vec2i operator+(Vec2i a, Vec2i b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2i operator-(Vec2i a, Vec2i b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2i operator-(Vec2i a) { return {-a.x, -a.y}; }
  friend constexpr bool operator==(Vec2i, Vec2i) = default;
  friend constexpr auto operator<=>(Vec2i, Vec2i) = default;
  constexpr bool is_zero() const { return x == 0 && y == 0; }
};

std::ostream& operator<<(std::ostream& os, Vec2i v);

/// Unbounded integer vector, for differences of long digit words.
struct BigVec2 {
  BigInt x;
  BigInt y;
  friend bool operator==(const BigVec2&, const BigVec2&) = default;
};

struct RationalPoint {
  Rational x;
  Rational y;

  friend RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend RationalPoint operator*(const Rational& k, const RationalPoint& p) {
    return {k * p.x, k * p.y};
  }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

/// Row-major 2x2 matrix [[a, b], [c, d]] over an exact ring.
template <typename T>
struct Matrix2 {
  T a{0}, b{0}, c{0}, d{0};

  static Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }

  friend Matrix2 operator*(const Matrix2& m, const Matrix2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend Matrix2 operator-(const Matrix2& m, const Matrix2& n) {
    return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
  }
  friend Matrix2 operator+(const Matrix2& m, const Matrix2& n) {
    return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
  }
  friend Matrix2 operator-(const Matrix2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

using IntMatrix2 = Matrix2<std::int64_t>;
using BigMatrix2 = Matrix2<BigInt>;
using RationalMatrix2 = Matrix2<Rational>;

RationalMatrix2 to_rational(const IntMatrix2& m);
RationalMatrix2 inverse(const RationalMatrix2& m);
RationalMatrix2 power(const RationalMatrix2& m, unsigned exponent);
RationalPoint apply(const RationalMatrix2& m, const RationalPoint& p);
Vec2i apply(const IntMatrix2& m, Vec2i v);

/// Solves m * x = rhs; m must be nonsingular.
RationalPoint solve(const RationalMatrix2& m, const RationalPoint& rhs);

}  // namespace tiletopo

template <>
struct std::hash<tiletopo::Vec2i> {
  std::size_t operator()(tiletopo::Vec2i v) const noexcept {
    return std::hash<std::int64_t>{}(v.x * 1000003 + v.y);
  }
};
