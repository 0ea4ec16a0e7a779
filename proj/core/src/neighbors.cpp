#include "tiletopo/neighbors.hpp"

#include "tiletopo/errors.hpp"

#include <algorithm>
#include <deque>

namespace tiletopo {

namespace {

bool by_y_then_x(Vec2i a, Vec2i b) {
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

Rational row_abs_sum(const RationalMatrix2& m, int row) {
  return row == 0 ? abs(m.a) + abs(m.b) : abs(m.c) + abs(m.d);
}

std::int64_t floor_to_int(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return f.convert_to<std::int64_t>();
}

}  // namespace

bool NeighborSet::contains(Vec2i s) const {
  return std::binary_search(members.begin(), members.end(), s, by_y_then_x);
}

std::int64_t neighbor_j(const TileParams& params) {
  return std::max<std::int64_t>(1, (params.b - 1) / (params.b - params.a + 1));
}

NeighborSet neighbor_set_formula(const TileParams& params) {
  if (params.a < 0) throw TileError(ErrorKind::OutOfRange, "formula needs normalized A >= 0");
  const std::int64_t a = params.a;
  NeighborSet out;
  out.j = neighbor_j(params);
  for (std::int64_t n = 1; n <= out.j; ++n) {
    Vec2i p{n - (n - 1) * a, -(n - 1)};
    Vec2i q{-n + n * a, n};
    for (Vec2i v : {p, -p, q, -q}) out.members.push_back(v);
  }
  Vec2i r{-a, -1};
  out.members.push_back(r);
  out.members.push_back(-r);
  std::sort(out.members.begin(), out.members.end(), by_y_then_x);
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

std::pair<Rational, Rational> neighbor_search_bound(const TileParams& params) {
  // Find k with ||M^-k||_inf <= 1/2. Then every such sum splits as
  // y_0 + M^-k y_1 + M^-2k y_2 + ... with each y_j a k-digit block, so
  // ||x||_inf <= H / (1 - rho) and coordinatewise |x_c| <= h_c + row_c(M^-k) * that.
  const RationalMatrix2 minv = params.inverse_matrix();
  const Rational half(1, 2);
  const Rational dmax(params.b - 1);
  RationalMatrix2 pk = RationalMatrix2::identity();
  Rational hx(0), hy(0);
  for (int k = 1;; ++k) {
    pk = pk * minv;
    hx += dmax * abs(pk.a);
    hy += dmax * abs(pk.c);
    Rational rho = std::max(row_abs_sum(pk, 0), row_abs_sum(pk, 1));
    if (rho <= half) {
      Rational total = std::max(hx, hy) / (Rational(1) - rho);
      return {hx + row_abs_sum(pk, 0) * total, hy + row_abs_sum(pk, 1) * total};
    }
    if (k > 4096) throw TileError(ErrorKind::NotExpanding, "no contraction certificate found");
  }
}

NeighborSet neighbor_set_search(const TileParams& params) {
  const auto [bx, by] = neighbor_search_bound(params);
  const std::int64_t rx = floor_to_int(bx);
  const std::int64_t ry = floor_to_int(by);
  const std::int64_t w = 2 * rx + 1;
  const std::int64_t h = 2 * ry + 1;
  const std::int64_t a = params.a;
  const std::int64_t b = params.b;
  const std::int64_t dmax = b - 1;
  auto index = [&](std::int64_t x, std::int64_t y) { return (y + ry) * w + (x + rx); };
  auto inside = [&](std::int64_t x, std::int64_t y) {
    return x >= -rx && x <= rx && y >= -ry && y <= ry;
  };

  // Out-degree inside the box: next y is fixed, next x ranges over an interval.
  std::vector<std::int64_t> outdeg(static_cast<std::size_t>(w * h), 0);
  for (std::int64_t y = -ry; y <= ry; ++y) {
    for (std::int64_t x = -rx; x <= rx; ++x) {
      std::int64_t ny = x - a * y;
      if (ny < -ry || ny > ry) continue;
      std::int64_t cx = -b * y;
      std::int64_t lo = std::max(cx - dmax, -rx);
      std::int64_t hi = std::min(cx + dmax, rx);
      outdeg[static_cast<std::size_t>(index(x, y))] = std::max<std::int64_t>(0, hi - lo + 1);
    }
  }

  // Greatest fixed point: repeatedly drop dead states and decrement predecessors.
  std::vector<char> alive(outdeg.size(), 1);
  std::deque<std::pair<std::int64_t, std::int64_t>> dead;
  for (std::int64_t y = -ry; y <= ry; ++y) {
    for (std::int64_t x = -rx; x <= rx; ++x) {
      if (outdeg[static_cast<std::size_t>(index(x, y))] == 0) {
        alive[static_cast<std::size_t>(index(x, y))] = 0;
        dead.emplace_back(x, y);
      }
    }
  }
  while (!dead.empty()) {
    auto [tx, ty] = dead.front();
    dead.pop_front();
    // Predecessors s: -B s.y + d = tx, s.x - A s.y = ty, |d| <= B-1.
    for (std::int64_t d = -dmax; d <= dmax; ++d) {
      std::int64_t num = d - tx;
      if (num % b != 0) continue;
      std::int64_t sy = num / b;
      std::int64_t sx = ty + a * sy;
      if (!inside(sx, sy)) continue;
      auto idx = static_cast<std::size_t>(index(sx, sy));
      if (!alive[idx]) continue;
      if (--outdeg[idx] == 0) {
        alive[idx] = 0;
        dead.emplace_back(sx, sy);
      }
    }
  }

  NeighborSet out;
  for (std::int64_t y = -ry; y <= ry; ++y) {
    for (std::int64_t x = -rx; x <= rx; ++x) {
      if ((x != 0 || y != 0) && alive[static_cast<std::size_t>(index(x, y))]) {
        out.members.push_back({x, y});
      }
    }
  }
  std::sort(out.members.begin(), out.members.end(), by_y_then_x);
  // J is read back from the cardinality |S| = 2 + 4J when it fits.
  out.j = (out.members.size() >= 2 && (out.members.size() - 2) % 4 == 0)
              ? static_cast<std::int64_t>((out.members.size() - 2) / 4)
              : -1;
  return out;
}

std::vector<Vec2i> neighbors_in_raw_basis(const NeighborSet& set,
                                          const AffineNormalization& affinity) {
  std::vector<Vec2i> out;
  out.reserve(set.size());
  IntMatrix2 cp = affinity.basis_change * affinity.reflection;
  for (Vec2i s : set.members) out.push_back(apply(cp, s));
  std::sort(out.begin(), out.end(), by_y_then_x);
  return out;
}

BigVec2 subdivision_diff(const DigitWord& u, const DigitWord& v, const TileParams& params) {
  if (u.size() != v.size()) {
    throw TileError(ErrorKind::LengthMismatch, "subdivision words differ in length");
  }
  validate_digits(u, params);
  validate_digits(v, params);
  BigVec2 s{0, 0};
  for (std::size_t i = 0; i < u.size(); ++i) {
    BigInt nx = -BigInt(params.b) * s.y + (u[i] - v[i]);
    BigInt ny = s.x - BigInt(params.a) * s.y;
    s = {std::move(nx), std::move(ny)};
  }
  return s;
}

bool subdivision_intersects(const DigitWord& u, const DigitWord& v, const TileParams& params,
                            const NeighborSet& set) {
  BigVec2 s = subdivision_diff(u, v, params);
  if (s.x == 0 && s.y == 0) return true;
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  if (abs(s.x) > kLimit || abs(s.y) > kLimit) return false;
  return set.contains({s.x.convert_to<std::int64_t>(), s.y.convert_to<std::int64_t>()});
}

bool subdivision_intersects(const DigitWord& u, const DigitWord& v, const TileParams& params) {
  return subdivision_intersects(u, v, params, neighbor_set_formula(params));
}

std::optional<std::pair<Address, Address>> adjacent_singleton_point(const DigitWord& u,
                                                                    const DigitWord& v,
                                                                    const TileParams& params) {
  if (params.regime() != 3) {
    throw TileError(ErrorKind::WrongRegime, "adjacent singleton points need 2A-B = 3");
  }
  if (u.size() != 3 || v.size() != 3) {
    throw TileError(ErrorKind::LengthMismatch, "adjacent singleton points need words of length 3");
  }
  validate_digits(u, params);
  validate_digits(v, params);
  if (u[0] - v[0] != 1 || u[1] - v[1] != params.a - 2 || u[2] - v[2] != -1) return std::nullopt;
  const Digit top = params.max_digit();
  return std::make_pair(Address::fractional(u, {0, top}), Address::fractional(v, {top, 0}));
}

}  // namespace tiletopo
