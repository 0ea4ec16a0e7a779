#pragma once

// Matrix number system of the collinear-digit tiles: parameters, the
// normalization to companion form, radix addresses and exact evaluation.

#include "tiletopo/arith.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tiletopo {

using Digit = int;
using DigitWord = std::vector<Digit>;

/// An integral matrix M0 together with the digit generator v, before any
/// change of basis.
struct RawInstance {
  IntMatrix2 m0;
  Vec2i v;
};

/// Normalized parameters: the tile is generated by the companion matrix
/// M = [[0, -b], [1, -a]] and digits {0, ..., b-1} times e1.
struct TileParams {
  std::int64_t a = 0;
  std::int64_t b = 2;
  bool reflected = false;

  /// Validates 0 <= a <= b and b >= 2.
  static TileParams make(std::int64_t a, std::int64_t b);

  IntMatrix2 companion() const { return {0, -b, 1, -a}; }
  RationalMatrix2 matrix() const { return to_rational(companion()); }
  RationalMatrix2 inverse_matrix() const;
  std::int64_t regime() const { return 2 * a - b; }
  Digit max_digit() const { return static_cast<Digit>(b - 1); }
  bool is_digit(Digit d) const { return d >= 0 && d < b; }

  friend bool operator==(const TileParams&, const TileParams&) = default;
};

/// The affine data relating a raw instance to its normalized tile:
///   T(M0, D0) = C * (P * T(M, D) + translation).
/// For non-reflected instances P is the identity and translation is zero.
struct AffineNormalization {
  IntMatrix2 basis_change;
  IntMatrix2 reflection = IntMatrix2::identity();
  RationalPoint translation;
};

std::pair<TileParams, AffineNormalization> normalize(const RawInstance& raw);

/// Checks the matrix identities behind a normalization: C^-1 M0 C is the
/// companion of the raw characteristic polynomial, C e1 = v, P M P^-1 = -M'
/// for reflected data and the translation solves (M'^2 - I) t = M' (B-1) e1.
bool verify_normalization(const RawInstance& raw, const TileParams& params,
                          const AffineNormalization& affinity);

/// Image of a normalized-tile point under the recorded affinity.
RationalPoint map_to_raw(const RationalPoint& p, const AffineNormalization& affinity);

/// Eventually periodic radix expansion  i_l ... i_0 . p_1 ... p_k (c_1 ... c_m)^inf.
/// Construction canonicalizes: leading zeros of the integer part are dropped,
/// the period is primitive and the preperiod is rolled into the period as far
/// as possible. Structural equality is therefore meaningful, but two distinct
/// canonical addresses may still denote one point.
class Address {
 public:
  Address() : period_{0} {}
  Address(DigitWord integer_part, DigitWord preperiod, DigitWord period);

  static Address fractional(DigitWord preperiod, DigitWord period) {
    return Address({}, std::move(preperiod), std::move(period));
  }

  /// Text syntax: optional integer digits and a dot, preperiod digits, then the
  /// period in parentheses, e.g. "440(04)". Digits >= 10 are written in
  /// brackets, comma separated: "1[10,11](0)".
  static Address parse(std::string_view text);
  std::string str() const;

  const DigitWord& integer_part() const { return integer_; }
  const DigitWord& preperiod() const { return pre_; }
  const DigitWord& period() const { return period_; }

  /// Fractional digit at position i (0-based, i.e. a_{i+1}).
  Digit digit_at(std::size_t i) const;
  DigitWord prefix(std::size_t n) const;
  /// 0.d w for the fractional address 0.w
  Address prepend(Digit d) const;
  /// Drops the first fractional digit.
  Address shift() const;

  template <typename F>
  Address map_digits(F&& f) const {
    DigitWord i = integer_, p = pre_, c = period_;
    for (auto& d : i) d = f(d);
    for (auto& d : p) d = f(d);
    for (auto& d : c) d = f(d);
    return Address(std::move(i), std::move(p), std::move(c));
  }

  friend bool operator==(const Address&, const Address&) = default;
  friend bool operator<(const Address& a, const Address& b);

 private:
  DigitWord integer_;
  DigitWord pre_;
  DigitWord period_;
};

void validate_digits(const Address& addr, const TileParams& params);
void validate_digits(const DigitWord& word, const TileParams& params);

/// Exact value of the address in base m with digits d * e1.
RationalPoint eval_address(const Address& addr, const RationalMatrix2& m);
RationalPoint point_eval(const Address& addr, const TileParams& params);

/// Digitwise a -> B-1-a.
Address flip(const Address& addr, const TileParams& params);

/// a^{(n)}: a for even n, B-1-a for odd n.
Digit alt_flip(std::int64_t n, Digit a, const TileParams& params);

/// f_a(p) = M^-1 (p + a e1)
RationalPoint apply_contraction(Digit a, const RationalPoint& p, const TileParams& params);

/// Sum_{i=1..m} M^{m-i} (word_i) e1, i.e. M^m times the value of 0.word.
BigVec2 radix_integer(const DigitWord& word, const TileParams& params);

}  // namespace tiletopo
