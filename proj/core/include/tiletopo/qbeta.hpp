#pragma once

// Exact arithmetic in Q(beta) for a real algebraic beta given by its minimal
// polynomial and an isolating rational interval.

#include "tiletopo/polynomial.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace tiletopo {

class AlgebraicField {
 public:
  /// `minimal` must be irreducible over Q with exactly one real root in (lo, hi].
  AlgebraicField(Poly minimal, Rational lo, Rational hi);

  const Poly& minimal_polynomial() const { return minimal_; }
  int degree() const { return minimal_.degree(); }

  /// Current enclosure of beta; refine() halves it.
  std::pair<Rational, Rational> interval() const;
  void refine() const;
  double approx() const;

 private:
  Poly minimal_;
  mutable std::mutex mutex_;
  mutable Rational lo_;
  mutable Rational hi_;
};

using FieldPtr = std::shared_ptr<const AlgebraicField>;

/// An element of Q(beta), stored as a polynomial in beta of degree below the
/// field degree.
class QBeta {
 public:
  QBeta() = default;
  QBeta(FieldPtr field, Poly value);
  static QBeta rational(FieldPtr field, const Rational& q) { return {std::move(field), Poly::constant(q)}; }
  static QBeta generator(FieldPtr field) { return {std::move(field), Poly::x()}; }

  const FieldPtr& field() const { return field_; }
  const Poly& poly() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  std::optional<Rational> as_rational() const;

  /// -1, 0 or 1; exact, refining the field interval as needed.
  int sign() const;
  double approx() const;
  QBeta inverse() const;
  QBeta pow(unsigned e) const;

  friend QBeta operator+(const QBeta& a, const QBeta& b);
  friend QBeta operator-(const QBeta& a, const QBeta& b);
  friend QBeta operator-(const QBeta& a);
  friend QBeta operator*(const QBeta& a, const QBeta& b);
  friend QBeta operator/(const QBeta& a, const QBeta& b) { return a * b.inverse(); }
  friend bool operator==(const QBeta& a, const QBeta& b) { return a.value_ == b.value_; }
  friend bool operator<(const QBeta& a, const QBeta& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const QBeta& a, const QBeta& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const QBeta& a, const QBeta& b) { return (a - b).sign() > 0; }
  friend bool operator>=(const QBeta& a, const QBeta& b) { return (a - b).sign() >= 0; }

  /// "c0 + c1*b + c2*b^2" with exact rational coefficients.
  std::string str() const;
  /// Parses the format of str(); the variable may be written b or beta.
  static QBeta parse(FieldPtr field, const std::string& text);

 private:
  FieldPtr field_;
  Poly value_;
};

}  // namespace tiletopo
