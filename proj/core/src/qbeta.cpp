#include "tiletopo/qbeta.hpp"

#include "tiletopo/errors.hpp"

#include <cctype>
#include <sstream>

namespace tiletopo {

AlgebraicField::AlgebraicField(Poly minimal, Rational lo, Rational hi)
    : minimal_(minimal.monic()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (minimal_.degree() < 1) {
    throw TileError(ErrorKind::NotIrreducible, "minimal polynomial must have positive degree");
  }
  if (count_real_roots(minimal_, lo_, hi_) != 1) {
    throw TileError(ErrorKind::CertificateFailure, "interval does not isolate a single root");
  }
}

std::pair<Rational, Rational> AlgebraicField::interval() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return {lo_, hi_};
}

void AlgebraicField::refine() const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (minimal_.degree() == 1) {
    lo_ = hi_ = -minimal_.coeff(0);
    return;
  }
  Rational mid = (lo_ + hi_) / 2;
  if (count_real_roots(minimal_, mid, hi_) == 1) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

double AlgebraicField::approx() const {
  auto [lo, hi] = interval();
  return to_double((lo + hi) / 2);
}

namespace {

Poly reduce(const Poly& value, const FieldPtr& field) {
  if (!field) throw TileError(ErrorKind::DegenerateBasis, "element without a field");
  if (value.degree() < field->degree()) return value;
  return divmod(value, field->minimal_polynomial()).second;
}

const FieldPtr& common(const QBeta& a, const QBeta& b) {
  if (a.field() != b.field()) {
    throw TileError(ErrorKind::DegenerateBasis, "operands live in different fields");
  }
  return a.field();
}

}  // namespace

QBeta::QBeta(FieldPtr field, Poly value) : field_(std::move(field)), value_(reduce(value, field_)) {}

std::optional<Rational> QBeta::as_rational() const {
  if (value_.degree() <= 0) return value_.coeff(0);
  return std::nullopt;
}

int QBeta::sign() const {
  if (value_.degree() <= 0) {
    Rational c = value_.coeff(0);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }
  // A nonzero reduced element of a field of degree d is not a rational
  // multiple of a root of any polynomial of degree below d, so it never
  // vanishes at beta and the enclosure eventually excludes zero.
  for (int iter = 0; iter < 4096; ++iter) {
    auto [lo, hi] = field_->interval();
    auto [vlo, vhi] = value_.eval_interval(lo, hi);
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    field_->refine();
  }
  throw TileError(ErrorKind::CertificateFailure, "sign of a field element undecided");
}

double QBeta::approx() const { return value_.eval_double(field_->approx()); }

QBeta operator+(const QBeta& a, const QBeta& b) { return {common(a, b), a.value_ + b.value_}; }
QBeta operator-(const QBeta& a, const QBeta& b) { return {common(a, b), a.value_ - b.value_}; }
QBeta operator-(const QBeta& a) { return {a.field_, Rational(-1) * a.value_}; }
QBeta operator*(const QBeta& a, const QBeta& b) { return {common(a, b), a.value_ * b.value_}; }

QBeta QBeta::inverse() const {
  if (is_zero()) throw TileError(ErrorKind::DegenerateBasis, "division by zero in Q(beta)");
  // Extended Euclid on (minimal, value): s * value == gcd == 1 modulo minimal.
  Poly r0 = field_->minimal_polynomial(), r1 = value_;
  Poly s0, s1 = Poly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) {
    throw TileError(ErrorKind::NotIrreducible, "minimal polynomial shares a factor with an element");
  }
  return {field_, Rational(1) / r0.coeff(0) * s0};
}

QBeta QBeta::pow(unsigned e) const {
  QBeta result = rational(field_, Rational(1));
  QBeta base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::string QBeta::str() const {
  if (value_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= value_.degree(); ++i) {
    Rational c = value_.coeff(i);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    os << to_string(abs(c));
    if (i == 1) os << "*b";
    if (i >= 2) os << "*b^" << i;
  }
  return os.str();
}

QBeta QBeta::parse(FieldPtr field, const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw TileError(ErrorKind::ParseError, "empty Q(beta) literal");
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sgn = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    Rational c(1);
    if (pos > start) c = parse_rational(s.substr(start, pos - start));
    int power = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'b')) {
      if (s[pos] == '*') ++pos;
      if (s.compare(pos, 4, "beta") == 0) {
        pos += 4;
      } else if (pos < s.size() && s[pos] == 'b') {
        ++pos;
      } else {
        throw TileError(ErrorKind::ParseError, "expected b in Q(beta) literal: " + text);
      }
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t e0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == e0) throw TileError(ErrorKind::ParseError, "missing exponent: " + text);
        power = std::stoi(s.substr(e0, pos - e0));
      }
    } else if (pos == start) {
      throw TileError(ErrorKind::ParseError, "bad Q(beta) literal: " + text);
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw TileError(ErrorKind::ParseError, "bad Q(beta) literal: " + text);
    }
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1);
    coeffs[static_cast<std::size_t>(power)] += sgn * c;
  }
  return {std::move(field), Poly(std::move(coeffs))};
}

}  // namespace tiletopo
