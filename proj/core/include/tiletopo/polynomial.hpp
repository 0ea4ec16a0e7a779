#pragma once

// Dense univariate polynomials over Q with the root-isolation tools needed
// for the Perron root.

#include "tiletopo/arith.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tiletopo {

class Poly {
 public:
  Poly() = default;
  /// Coefficients from the constant term upwards.
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  Poly monic() const;
  Poly derivative() const;

  Rational eval(const Rational& x) const;
  /// Range enclosure of p over [lo, hi] by interval Horner evaluation.
  std::pair<Rational, Rational> eval_interval(const Rational& lo, const Rational& hi) const;
  double eval_double(double x) const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Rational& k, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// p = q * d + r with deg r < deg d.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);
Poly gcd(Poly p, Poly q);

/// Rational roots with multiplicity removed, ascending.
std::vector<Rational> rational_roots(const Poly& p);

/// Number of distinct real roots in (lo, hi] via a Sturm sequence.
int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi);
/// Every real root lies in [-bound, bound].
Rational root_bound(const Poly& p);

/// Isolating interval (lo, hi] of the largest real root of a squarefree
/// polynomial, of width at most `width`. Returns nothing without real roots.
bool isolate_largest_root(const Poly& p, const Rational& width, Rational& lo, Rational& hi);

/// Characteristic polynomial det(xI - m) of a square rational matrix
/// (Faddeev-LeVerrier).
Poly characteristic_polynomial(const std::vector<std::vector<Rational>>& m);

}  // namespace tiletopo
