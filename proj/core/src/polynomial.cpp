#include "tiletopo/polynomial.hpp"

#include "tiletopo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tiletopo {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational lead = leading();
  std::vector<Rational> out(c_);
  for (auto& v : out) v /= lead;
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(out));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Rational, Rational> Poly::eval_interval(const Rational& lo, const Rational& hi) const {
  Rational alo(0), ahi(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
    Rational mn = std::min({p1, p2, p3, p4});
    Rational mx = std::max({p1, p2, p3, p4});
    alo = mn + *it;
    ahi = mx + *it;
  }
  return {alo, ahi};
}

double Poly::eval_double(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < p.c_.size()) out[i] += p.c_[i];
    if (i < q.c_.size()) out[i] += q.c_[i];
  }
  return Poly(std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) { return p + Rational(-1) * q; }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rational> out(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Rational& k, const Poly& p) {
  std::vector<Rational> out(p.c_);
  for (auto& v : out) v *= k;
  return Poly(std::move(out));
}

std::string Poly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw TileError(ErrorKind::DegenerateBasis, "polynomial division by zero");
  std::vector<Rational> rem(p.coeffs());
  const int dd = d.degree();
  if (p.degree() < dd) return {Poly(), p};
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rational& lead = d.leading();
  for (int i = p.degree(); i >= dd; --i) {
    Rational f = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= f * d.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly p, Poly q) {
  while (!q.is_zero()) {
    Poly r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

namespace {

std::vector<BigInt> integer_coefficients(const Poly& p) {
  BigInt l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, BigInt(denominator(c)));
  std::vector<BigInt> out;
  for (const auto& c : p.coeffs()) out.push_back(BigInt(numerator(c)) * (l / BigInt(denominator(c))));
  return out;
}

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& p : seq) {
    Rational v = p.eval(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  return seq;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  std::vector<BigInt> c = integer_coefficients(p);
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Rational(0));
  std::vector<BigInt> cc(c.begin() + static_cast<std::ptrdiff_t>(shift), c.end());
  if (cc.size() >= 2) {
    for (const BigInt& num : positive_divisors(cc.front())) {
      for (const BigInt& den : positive_divisors(cc.back())) {
        for (int sgn : {1, -1}) {
          Rational cand(BigInt(sgn) * num, den);
          if (p.eval(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  std::vector<Poly> seq = sturm_sequence(p);
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

Rational root_bound(const Poly& p) {
  if (p.degree() < 1) return Rational(0);
  Rational mx(0);
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, abs(p.coeff(i) / p.leading()));
  return Rational(1) + mx;
}

bool isolate_largest_root(const Poly& p, const Rational& width, Rational& lo, Rational& hi) {
  std::vector<Poly> seq = sturm_sequence(p);
  Rational bound = root_bound(p);
  lo = -bound - 1;
  hi = bound;
  auto count = [&](const Rational& a, const Rational& b) {
    return sign_changes(seq, a) - sign_changes(seq, b);
  };
  if (count(lo, hi) == 0) return false;
  while (hi - lo > width || count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (count(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return true;
}

Poly characteristic_polynomial(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<Rational> coeff(n + 1);
  coeff[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += coeff[n - k + 1];
    }
    mk = std::move(next);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += m[i][l] * mk[l][i];
    }
    coeff[n - k] = -tr / static_cast<long>(k);
  }
  return Poly(std::move(coeff));
}

}  // namespace tiletopo
