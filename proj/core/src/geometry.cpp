#include "tiletopo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace tiletopo {

PointD to_double(const RationalPoint& p) { return {to_double(p.x), to_double(p.y)}; }

std::vector<PointD> to_double(const std::vector<RationalPoint>& pts) {
  std::vector<PointD> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_double(p));
  return out;
}

namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();
  void add(const PointD& p) {
    x0 = std::min(x0, p[0]);
    y0 = std::min(y0, p[1]);
    x1 = std::max(x1, p[0]);
    y1 = std::max(y1, p[1]);
  }
  double extent() const { return std::max(x1 - x0, y1 - y0); }
};

/// Uniform bucket grid keyed by cell coordinates.
class Grid {
 public:
  Grid(const Box& box, double cell) : x0_(box.x0), y0_(box.y0), cell_(cell) {}

  std::int64_t cx(double x) const { return static_cast<std::int64_t>(std::floor((x - x0_) / cell_)); }
  std::int64_t cy(double y) const { return static_cast<std::int64_t>(std::floor((y - y0_) / cell_)); }
  double cell() const { return cell_; }

  void insert_box(int item, double xa, double ya, double xb, double yb) {
    for (std::int64_t i = cx(xa); i <= cx(xb); ++i) {
      for (std::int64_t j = cy(ya); j <= cy(yb); ++j) cells_[key(i, j)].push_back(item);
    }
  }
  const std::vector<int>* at(std::int64_t i, std::int64_t j) const {
    auto it = cells_.find(key(i, j));
    return it == cells_.end() ? nullptr : &it->second;
  }
  const std::unordered_map<std::uint64_t, std::vector<int>>& cells() const { return cells_; }

 private:
  static std::uint64_t key(std::int64_t i, std::int64_t j) {
    return (static_cast<std::uint64_t>(i) << 32) ^ (static_cast<std::uint64_t>(j) & 0xffffffffu);
  }
  double x0_, y0_, cell_;
  std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

/// Float pre-test: 0 when the segments are certainly disjoint, 1 when they
/// certainly cross properly, -1 when undecided.
int float_segments_intersect(const PointD& p1, const PointD& p2, const PointD& q1, const PointD& q2,
                             double eps, double scale) {
  if (std::max(p1[0], p2[0]) + eps < std::min(q1[0], q2[0]) ||
      std::max(q1[0], q2[0]) + eps < std::min(p1[0], p2[0]) ||
      std::max(p1[1], p2[1]) + eps < std::min(q1[1], q2[1]) ||
      std::max(q1[1], q2[1]) + eps < std::min(p1[1], p2[1])) {
    return 0;
  }
  const double thr = 1e-9 * scale * scale;
  auto orient = [thr](const PointD& a, const PointD& b, const PointD& c) {
    const double v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    return v > thr ? 1 : (v < -thr ? -1 : 0);
  };
  const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
  if ((o1 != 0 && o1 == o2) || (o3 != 0 && o3 == o4)) return 0;
  if (o1 * o2 < 0 && o3 * o4 < 0) return 1;
  return -1;
}

double point_segment_distance(const PointD& p, const PointD& a, const PointD& b) {
  double dx = b[0] - a[0], dy = b[1] - a[1];
  double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  double ex = a[0] + t * dx - p[0], ey = a[1] + t * dy - p[1];
  return std::hypot(ex, ey);
}

/// Nearest-item search by expanding rings of cells. `dist` returns the
/// distance from the query to an item.
template <typename Dist>
double nearest(const Grid& grid, const PointD& p, std::int64_t max_ring, Dist&& dist) {
  const std::int64_t ci = grid.cx(p[0]), cj = grid.cy(p[1]);
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t r = 0; r <= max_ring; ++r) {
    for (std::int64_t i = ci - r; i <= ci + r; ++i) {
      for (std::int64_t j = cj - r; j <= cj + r; ++j) {
        if (std::max(std::abs(i - ci), std::abs(j - cj)) != r) continue;
        if (const auto* items = grid.at(i, j)) {
          for (int k : *items) best = std::min(best, dist(k));
        }
      }
    }
    if (best <= static_cast<double>(r) * grid.cell()) break;
  }
  return best;
}

}  // namespace

bool segments_intersect(const RationalPoint& p1, const RationalPoint& p2, const RationalPoint& q1,
                        const RationalPoint& q2) {
  int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
  int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

bool is_simple_polygon(const std::vector<RationalPoint>& v) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  {
    std::vector<RationalPoint> sorted(v);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  // Adjacent edges share one vertex; they overlap only when folding back.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    const auto& c = v[(i + 2) % n];
    if (orientation(a, b, c) == 0) {
      Rational dot = (a.x - b.x) * (c.x - b.x) + (a.y - b.y) * (c.y - b.y);
      if (dot > 0) return false;
    }
  }
  if (n == 3) return true;

  std::vector<PointD> d = to_double(v);
  Box box;
  for (const auto& p : d) box.add(p);
  const double scale = std::max(box.extent(), 1e-300);
  const double eps = 1e-9 * scale;
  Grid grid(box, std::max(scale / std::sqrt(static_cast<double>(n)), 4 * eps));
  for (std::size_t i = 0; i < n; ++i) {
    const PointD& a = d[i];
    const PointD& b = d[(i + 1) % n];
    grid.insert_box(static_cast<int>(i), std::min(a[0], b[0]) - eps, std::min(a[1], b[1]) - eps,
                    std::max(a[0], b[0]) + eps, std::max(a[1], b[1]) + eps);
  }
  std::unordered_set<std::uint64_t> tested;
  for (const auto& [key, items] : grid.cells()) {
    for (std::size_t x = 0; x < items.size(); ++x) {
      for (std::size_t y = x + 1; y < items.size(); ++y) {
        std::size_t i = static_cast<std::size_t>(std::min(items[x], items[y]));
        std::size_t j = static_cast<std::size_t>(std::max(items[x], items[y]));
        if (j == i + 1 || (i == 0 && j == n - 1)) continue;
        if (!tested.insert(static_cast<std::uint64_t>(i) * n + j).second) continue;
        const int quick = float_segments_intersect(d[i], d[(i + 1) % n], d[j], d[(j + 1) % n], eps, scale);
        if (quick == 0) continue;
        if (quick == 1 || segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
      }
    }
  }
  return true;
}

double hausdorff_points(const std::vector<PointD>& p, const std::vector<PointD>& q) {
  if (p.empty() || q.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<PointD>& from, const std::vector<PointD>& to) {
    Box box;
    for (const auto& x : to) box.add(x);
    for (const auto& x : from) box.add(x);
    const double scale = std::max(box.extent(), 1e-300);
    Grid grid(box, scale / std::max(1.0, std::sqrt(static_cast<double>(to.size()))));
    for (std::size_t k = 0; k < to.size(); ++k) {
      grid.insert_box(static_cast<int>(k), to[k][0], to[k][1], to[k][0], to[k][1]);
    }
    const auto rings = static_cast<std::int64_t>(scale / grid.cell()) + 2;
    double worst = 0;
    for (const auto& x : from) {
      worst = std::max(worst, nearest(grid, x, rings, [&](int k) {
                         return std::hypot(to[static_cast<std::size_t>(k)][0] - x[0],
                                           to[static_cast<std::size_t>(k)][1] - x[1]);
                       }));
    }
    return worst;
  };
  return std::max(directed(p, q), directed(q, p));
}

double hausdorff_polygons(const std::vector<PointD>& p, const std::vector<PointD>& q, double tol) {
  if (p.empty() || q.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [tol](const std::vector<PointD>& from, const std::vector<PointD>& to) {
    Box box;
    for (const auto& x : to) box.add(x);
    for (const auto& x : from) box.add(x);
    const double scale = std::max(box.extent(), 1e-300);
    const std::size_t m = to.size();
    Grid grid(box, scale / std::max(1.0, std::sqrt(static_cast<double>(m))));
    for (std::size_t k = 0; k < m; ++k) {
      const PointD& a = to[k];
      const PointD& b = to[(k + 1) % m];
      grid.insert_box(static_cast<int>(k), std::min(a[0], b[0]), std::min(a[1], b[1]),
                      std::max(a[0], b[0]), std::max(a[1], b[1]));
    }
    const auto rings = static_cast<std::int64_t>(scale / grid.cell()) + 2;
    auto segment_dist = [&](const PointD& x, int k) {
      auto kk = static_cast<std::size_t>(k);
      return point_segment_distance(x, to[kk], to[(kk + 1) % m]);
    };
    const std::size_t n = from.size();
    std::vector<double> dv(n);
    double best = 0;
    for (std::size_t k = 0; k < n; ++k) {
      dv[k] = nearest(grid, from[k], rings, [&](int s) { return segment_dist(from[k], s); });
      best = std::max(best, dv[k]);
    }
    // Branch and bound per edge: the distance to `to` is 1-Lipschitz, so on a
    // piece of length L with end values da, db it never exceeds
    // (da + db + L) / 2. Candidate segments are gathered once per edge.
    struct Piece {
      PointD a, b;
      double da, db, bound;
      bool operator<(const Piece& o) const { return bound < o.bound; }
    };
    std::vector<std::pair<double, std::size_t>> edges;
    for (std::size_t k = 0; k < n; ++k) {
      const PointD& a = from[k];
      const PointD& b = from[(k + 1) % n];
      edges.push_back({(dv[k] + dv[(k + 1) % n] + std::hypot(b[0] - a[0], b[1] - a[1])) / 2, k});
    }
    std::sort(edges.rbegin(), edges.rend());
    std::vector<std::size_t> stamp(m, n);
    std::vector<int> cand;
    for (const auto& [bound0, k] : edges) {
      if (bound0 <= best + tol) break;
      const PointD& a = from[k];
      const PointD& b = from[(k + 1) % n];
      cand.clear();
      for (std::int64_t i = grid.cx(std::min(a[0], b[0]) - bound0); i <= grid.cx(std::max(a[0], b[0]) + bound0); ++i) {
        for (std::int64_t j = grid.cy(std::min(a[1], b[1]) - bound0); j <= grid.cy(std::max(a[1], b[1]) + bound0); ++j) {
          if (const auto* items = grid.at(i, j)) {
            for (int s : *items) {
              if (stamp[static_cast<std::size_t>(s)] != k) {
                stamp[static_cast<std::size_t>(s)] = k;
                cand.push_back(s);
              }
            }
          }
        }
      }
      auto dist_to = [&](const PointD& x) {
        double d = std::numeric_limits<double>::infinity();
        for (int s : cand) d = std::min(d, segment_dist(x, s));
        return d;
      };
      // Distance to one convex segment is convex along a line, so the larger
      // end value bounds it on the piece; the minimum over segments bounds the
      // distance to the whole curve.
      auto piece_bound = [&](const PointD& pa, const PointD& pb, double da, double db) {
        double ub = (da + db + std::hypot(pb[0] - pa[0], pb[1] - pa[1])) / 2;
        for (int s : cand) ub = std::min(ub, std::max(segment_dist(pa, s), segment_dist(pb, s)));
        return ub;
      };
      std::priority_queue<Piece> heap;
      const double da0 = dv[k], db0 = dv[(k + 1) % n];
      const double top = piece_bound(a, b, da0, db0);
      if (top > best + tol) heap.push({a, b, da0, db0, top});
      while (!heap.empty()) {
        Piece pc = heap.top();
        heap.pop();
        if (pc.bound <= best + tol) break;
        const PointD mid{(pc.a[0] + pc.b[0]) / 2, (pc.a[1] + pc.b[1]) / 2};
        const double dm = dist_to(mid);
        best = std::max(best, dm);
        const double b1 = piece_bound(pc.a, mid, pc.da, dm);
        const double b2 = piece_bound(mid, pc.b, dm, pc.db);
        if (b1 > best + tol) heap.push({pc.a, mid, pc.da, dm, b1});
        if (b2 > best + tol) heap.push({mid, pc.b, dm, pc.db, b2});
      }
    }
    return best;
  };
  return std::max(directed(p, q), directed(q, p));
}

}  // namespace tiletopo
