#include "tiletopo/numsys.hpp"

#include "tiletopo/errors.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace tiletopo {

TileParams TileParams::make(std::int64_t a, std::int64_t b) {
  if (b < 2) throw TileError(ErrorKind::BadDeterminant, "B must be at least 2");
  if (a < 0) throw TileError(ErrorKind::OutOfRange, "normalized parameters need A >= 0");
  if (a > b) throw TileError(ErrorKind::NotExpanding, "A must not exceed B");
  return TileParams{a, b, false};
}

RationalMatrix2 TileParams::inverse_matrix() const {
  // M^-1 = (1/B) [[-A, B], [-1, 0]]
  Rational inv_b(1, b);
  return {Rational(-a) * inv_b, Rational(1), Rational(-1) * inv_b, Rational(0)};
}

std::pair<TileParams, AffineNormalization> normalize(const RawInstance& raw) {
  const IntMatrix2& m0 = raw.m0;
  std::int64_t b = m0.det();
  std::int64_t a = -m0.trace();
  if (b < 2) throw TileError(ErrorKind::BadDeterminant, "det(M0) must be at least 2");
  if (a > b || -a > b) throw TileError(ErrorKind::NotExpanding, "|A| must not exceed B");
  Vec2i mv = apply(m0, raw.v);
  IntMatrix2 c{raw.v.x, mv.x, raw.v.y, mv.y};
  if (c.det() == 0) {
    throw TileError(ErrorKind::DegenerateBasis, "v and M0 v are linearly dependent");
  }

  AffineNormalization aff;
  aff.basis_change = c;
  TileParams params{a, b, false};
  if (a < 0) {
    params.a = -a;
    params.reflected = true;
    aff.reflection = {1, 0, 0, -1};
    // The raw companion is M2 = [[0,-B],[1,|A|]]; its translation solves
    // (M2^2 - I) t = M2 (B-1) e1.
    RationalMatrix2 m2 = to_rational(IntMatrix2{0, -b, 1, -a});
    RationalPoint rhs = apply(m2, RationalPoint{Rational(b - 1), Rational(0)});
    aff.translation = solve(m2 * m2 - RationalMatrix2::identity(), rhs);
  }
  return {params, aff};
}

bool verify_normalization(const RawInstance& raw, const TileParams& params,
                          const AffineNormalization& affinity) {
  const IntMatrix2& c = affinity.basis_change;
  if (c.det() == 0) return false;
  std::int64_t raw_a = -raw.m0.trace();
  std::int64_t raw_b = raw.m0.det();
  // M0 C = C companion(raw)
  IntMatrix2 raw_companion{0, -raw_b, 1, -raw_a};
  if (raw.m0 * c != c * raw_companion) return false;
  if (Vec2i{c.a, c.c} != raw.v) return false;
  if (params.b != raw_b) return false;
  if (!params.reflected) {
    return params.a == raw_a && affinity.reflection == IntMatrix2::identity() &&
           affinity.translation == RationalPoint{};
  }
  if (params.a != -raw_a) return false;
  const IntMatrix2& p = affinity.reflection;
  // P M1 P^-1 = -M2 with P an involution
  if (p * p != IntMatrix2::identity()) return false;
  if (p * params.companion() * p != -raw_companion) return false;
  RationalMatrix2 m2 = to_rational(raw_companion);
  RationalPoint lhs = apply(m2 * m2 - RationalMatrix2::identity(), affinity.translation);
  return lhs == apply(m2, RationalPoint{Rational(raw_b - 1), Rational(0)});
}

RationalPoint map_to_raw(const RationalPoint& p, const AffineNormalization& affinity) {
  RationalPoint q = apply(to_rational(affinity.reflection), p) + affinity.translation;
  return apply(to_rational(affinity.basis_change), q);
}

// ---------------------------------------------------------------------------
// Address

namespace {

DigitWord primitive_root(const DigitWord& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = w[i] == w[i - len];
    if (ok) return DigitWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
  }
  return w;
}

void append_digits(std::string& out, const DigitWord& word) {
  for (std::size_t i = 0; i < word.size();) {
    if (word[i] < 10) {
      out.push_back(static_cast<char>('0' + word[i]));
      ++i;
      continue;
    }
    out.push_back('[');
    bool first = true;
    while (i < word.size() && word[i] >= 10) {
      if (!first) out.push_back(',');
      out += std::to_string(word[i]);
      first = false;
      ++i;
    }
    out.push_back(']');
  }
}

class AddressParser {
 public:
  explicit AddressParser(std::string_view text) : text_(text) {}

  DigitWord digits_until(std::string_view stops) {
    DigitWord out;
    while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos) {
      char ch = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        out.push_back(ch - '0');
        ++pos_;
      } else if (ch == '[') {
        ++pos_;
        parse_bracket(out);
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        fail("unexpected character");
      }
    }
    return out;
  }

  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool done() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& why) const {
    throw TileError(ErrorKind::ParseError,
                    why + " at offset " + std::to_string(pos_) + " in '" +
                        std::string(text_) + "'");
  }

 private:
  void parse_bracket(DigitWord& out) {
    std::string number;
    for (;;) {
      if (pos_ >= text_.size()) fail("unterminated bracket");
      char ch = text_[pos_++];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        number.push_back(ch);
      } else if (ch == ',' || ch == ']') {
        if (number.empty()) fail("empty digit in bracket");
        out.push_back(std::stoi(number));
        number.clear();
        if (ch == ']') return;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        fail("unexpected character in bracket");
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Address::Address(DigitWord integer_part, DigitWord preperiod, DigitWord period)
    : integer_(std::move(integer_part)), pre_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw TileError(ErrorKind::ParseError, "address period must be nonempty");
  auto first_nonzero = std::find_if(integer_.begin(), integer_.end(), [](Digit d) { return d != 0; });
  integer_.erase(integer_.begin(), first_nonzero);
  period_ = primitive_root(period_);
  while (!pre_.empty() && pre_.back() == period_.back()) {
    pre_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

Address Address::parse(std::string_view text) {
  AddressParser p(text);
  DigitWord head = p.digits_until(".(");
  DigitWord integer;
  DigitWord pre;
  if (p.accept('.')) {
    integer = std::move(head);
    pre = p.digits_until("(");
  } else {
    pre = std::move(head);
  }
  if (!p.accept('(')) p.fail("expected '(' opening the period");
  DigitWord period = p.digits_until(")");
  if (!p.accept(')')) p.fail("expected ')' closing the period");
  if (!p.done()) p.fail("trailing characters");
  if (period.empty()) p.fail("empty period");
  return Address(std::move(integer), std::move(pre), std::move(period));
}

std::string Address::str() const {
  std::string out;
  if (!integer_.empty()) {
    append_digits(out, integer_);
    out.push_back('.');
  }
  append_digits(out, pre_);
  out.push_back('(');
  append_digits(out, period_);
  out.push_back(')');
  return out;
}

Digit Address::digit_at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

DigitWord Address::prefix(std::size_t n) const {
  DigitWord out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(digit_at(i));
  return out;
}

Address Address::prepend(Digit d) const {
  DigitWord pre;
  pre.reserve(pre_.size() + 1);
  pre.push_back(d);
  pre.insert(pre.end(), pre_.begin(), pre_.end());
  return Address(integer_, std::move(pre), period_);
}

Address Address::shift() const {
  if (!pre_.empty()) return Address(integer_, DigitWord(pre_.begin() + 1, pre_.end()), period_);
  DigitWord rotated = period_;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  return Address(integer_, {}, std::move(rotated));
}

bool operator<(const Address& a, const Address& b) {
  return std::tie(a.integer_, a.pre_, a.period_) < std::tie(b.integer_, b.pre_, b.period_);
}

void validate_digits(const DigitWord& word, const TileParams& params) {
  for (Digit d : word) {
    if (!params.is_digit(d)) {
      throw TileError(ErrorKind::OutOfRange,
                      "digit " + std::to_string(d) + " outside [0," +
                          std::to_string(params.b - 1) + "]");
    }
  }
}

void validate_digits(const Address& addr, const TileParams& params) {
  validate_digits(addr.integer_part(), params);
  validate_digits(addr.preperiod(), params);
  validate_digits(addr.period(), params);
}

RationalPoint eval_address(const Address& addr, const RationalMatrix2& m) {
  // Periodic tail: (M^p - I) x = sum_{i=1..p} M^{p-i} c_i e1.
  RationalPoint rhs;
  for (Digit c : addr.period()) rhs = apply(m, rhs) + RationalPoint{Rational(c), Rational(0)};
  RationalMatrix2 mp = power(m, static_cast<unsigned>(addr.period().size()));
  RationalPoint x = solve(mp - RationalMatrix2::identity(), rhs);

  RationalMatrix2 minv = inverse(m);
  for (auto it = addr.preperiod().rbegin(); it != addr.preperiod().rend(); ++it) {
    x = apply(minv, x + RationalPoint{Rational(*it), Rational(0)});
  }
  RationalPoint whole;
  for (Digit d : addr.integer_part()) whole = apply(m, whole) + RationalPoint{Rational(d), Rational(0)};
  return whole + x;
}

RationalPoint point_eval(const Address& addr, const TileParams& params) {
  validate_digits(addr, params);
  return eval_address(addr, params.matrix());
}

Address flip(const Address& addr, const TileParams& params) {
  validate_digits(addr, params);
  const Digit top = params.max_digit();
  return addr.map_digits([top](Digit d) { return top - d; });
}

Digit alt_flip(std::int64_t n, Digit a, const TileParams& params) {
  if (!params.is_digit(a)) throw TileError(ErrorKind::OutOfRange, "digit out of range");
  return (n % 2 == 0) ? a : params.max_digit() - a;
}

RationalPoint apply_contraction(Digit a, const RationalPoint& p, const TileParams& params) {
  if (!params.is_digit(a)) throw TileError(ErrorKind::OutOfRange, "digit out of range");
  return apply(params.inverse_matrix(), p + RationalPoint{Rational(a), Rational(0)});
}

BigVec2 radix_integer(const DigitWord& word, const TileParams& params) {
  BigVec2 s{0, 0};
  for (Digit d : word) {
    // M (x, y) = (-B y, x - A y)
    BigInt nx = -BigInt(params.b) * s.y + d;
    BigInt ny = s.x - BigInt(params.a) * s.y;
    s = {std::move(nx), std::move(ny)};
  }
  return s;
}

}  // namespace tiletopo
