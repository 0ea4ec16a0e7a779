#include "tiletopo/arith.hpp"

#include "tiletopo/errors.hpp"

#include <ostream>

namespace tiletopo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotExpanding: return "NotExpanding";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::BadDeterminant: return "BadDeterminant";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::WrongRegime: return "WrongRegime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NoConsistentOrdering: return "NoConsistentOrdering";
    case ErrorKind::NonPeriodicWalk: return "NonPeriodicWalk";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::IdentityFailure: return "IdentityFailure";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw TileError(ErrorKind::ParseError, "not a rational number: '" + text + "'");
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, Vec2i v) {
  return os << '(' << v.x << ',' << v.y << ')';
}

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

RationalMatrix2 to_rational(const IntMatrix2& m) {
  return {Rational(m.a), Rational(m.b), Rational(m.c), Rational(m.d)};
}

RationalMatrix2 inverse(const RationalMatrix2& m) {
  Rational det = m.det();
  if (det == 0) throw TileError(ErrorKind::DegenerateBasis, "singular matrix");
  return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

RationalMatrix2 power(const RationalMatrix2& m, unsigned exponent) {
  RationalMatrix2 result = RationalMatrix2::identity();
  RationalMatrix2 base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

RationalPoint apply(const RationalMatrix2& m, const RationalPoint& p) {
  return {m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y};
}

Vec2i apply(const IntMatrix2& m, Vec2i v) {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

RationalPoint solve(const RationalMatrix2& m, const RationalPoint& rhs) {
  Rational det = m.det();
  if (det == 0) throw TileError(ErrorKind::DegenerateBasis, "singular linear system");
  return {(rhs.x * m.d - m.b * rhs.y) / det, (m.a * rhs.y - m.c * rhs.x) / det};
}

}  // namespace tiletopo
