#include "tiletopo/contact_graph.hpp"

#include "tiletopo/errors.hpp"
#include "tiletopo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace tiletopo {

int ContactGraph::state_index(Vec2i s) const {
  for (int i = 0; i < kContactStates; ++i) {
    if (states[static_cast<std::size_t>(i)] == s) return i;
  }
  return -1;
}

std::array<std::array<std::int64_t, kContactStates>, kContactStates> ContactGraph::incidence() const {
  std::array<std::array<std::int64_t, kContactStates>, kContactStates> d{};
  for (const auto& e : edges) ++d[static_cast<std::size_t>(e.target)][static_cast<std::size_t>(e.source)];
  return d;
}

bool ContactGraph::strongly_connected() const {
  auto reach = [&](bool forward) {
    std::array<bool, kContactStates> seen{};
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        int from = forward ? e.source : e.target;
        int to = forward ? e.target : e.source;
        if (from == s && !seen[static_cast<std::size_t>(to)]) {
          seen[static_cast<std::size_t>(to)] = true;
          stack.push_back(to);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach(true) && reach(false);
}

int ContactGraph::flipped_edge(int edge_index) const {
  const ContactEdge& e = edges.at(static_cast<std::size_t>(edge_index));
  const ContactEdge f{opposite(e.source), opposite(e.target), params.max_digit() - e.a,
                      params.max_digit() - e.a_prime};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k] == f) return static_cast<int>(k);
  }
  return -1;
}

bool ContactGraph::flip_symmetric() const {
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (flipped_edge(static_cast<int>(k)) < 0) return false;
  }
  return true;
}

ContactGraph build_contact_graph(const TileParams& params) {
  if (params.a <= 0) {
    throw TileError(ErrorKind::WrongRegime, "the contact graph needs A > 0");
  }
  ContactGraph g;
  g.params = params;
  const std::int64_t a = params.a;
  const Vec2i p1{1, 0}, q1{a - 1, 1}, r{-a, -1};
  g.states = {-r, q1, -p1, r, -q1, p1};
  const IntMatrix2 m = params.companion();
  for (int i = 0; i < kContactStates; ++i) {
    const Vec2i ms = apply(m, g.states[static_cast<std::size_t>(i)]);
    for (Digit d = 0; d < params.b; ++d) {
      for (int j = 0; j < kContactStates; ++j) {
        const Vec2i diff = g.states[static_cast<std::size_t>(j)] - ms;  // (a' - a, 0)
        if (diff.y != 0) continue;
        const std::int64_t ap = d + diff.x;
        if (ap < 0 || ap >= params.b) continue;
        g.edges.push_back({i, j, d, static_cast<Digit>(ap)});
      }
    }
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    g.out[static_cast<std::size_t>(g.edges[k].source)].push_back(static_cast<int>(k));
  }
  return g;
}

GifsReport boundary_gifs_check(const ContactGraph& graph, int depth, double seed_lo, double seed_hi,
                               double resolution) {
  if (depth < 1) throw TileError(ErrorKind::OutOfRange, "depth must be at least 1");
  const double a = static_cast<double>(graph.params.a), b = static_cast<double>(graph.params.b);
  // M^-1 = (1/B) [[-A, B], [-1, 0]]
  auto contract = [&](const PointD& p, Digit d) {
    const double x = p[0] + d, y = p[1];
    return PointD{(-a * x + b * y) / b, -x / b};
  };
  using Cloud = std::vector<PointD>;
  std::array<Cloud, kContactStates> cur;
  for (auto& c : cur) {
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; j <= 4; ++j) {
        c.push_back({seed_lo + (seed_hi - seed_lo) * i / 4.0, seed_lo + (seed_hi - seed_lo) * j / 4.0});
      }
    }
  }
  GifsReport report;
  for (int it = 0; it < depth; ++it) {
    std::array<Cloud, kContactStates> next;
    for (int s = 0; s < kContactStates; ++s) {
      std::unordered_set<std::uint64_t> seen;
      for (int k : graph.out[static_cast<std::size_t>(s)]) {
        const ContactEdge& e = graph.edges[static_cast<std::size_t>(k)];
        for (const PointD& p : cur[static_cast<std::size_t>(e.target)]) {
          PointD q = contract(p, e.a);
          auto ix = static_cast<std::int64_t>(std::llround(q[0] / resolution));
          auto iy = static_cast<std::int64_t>(std::llround(q[1] / resolution));
          std::uint64_t key = (static_cast<std::uint64_t>(ix) << 32) ^ (static_cast<std::uint64_t>(iy) & 0xffffffffu);
          if (seen.insert(key).second) next[static_cast<std::size_t>(s)].push_back(q);
        }
      }
    }
    double dist = 0;
    for (int s = 0; s < kContactStates; ++s) {
      dist = std::max(dist, hausdorff_points(cur[static_cast<std::size_t>(s)], next[static_cast<std::size_t>(s)]));
    }
    report.successive.push_back(dist);
    cur = std::move(next);
  }
  report.all_nonempty = std::all_of(cur.begin(), cur.end(), [](const Cloud& c) { return !c.empty(); });
  report.pieces = std::move(cur);
  return report;
}

namespace {

/// Largest real root among the roots of p, as a field with its isolating
/// interval. Rational roots are split off first; the remaining factor has
/// degree at most 3 for the quotient matrix and no rational root, hence is
/// irreducible.
FieldPtr dominant_root_field(const Poly& p) {
  Poly rest = p;
  std::vector<Rational> roots = rational_roots(p);
  for (const Rational& r : roots) {
    const Poly lin({-r, Rational(1)});
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q;
    }
  }
  std::optional<Rational> best_rational;
  if (!roots.empty()) best_rational = roots.back();
  if (rest.degree() > 3) {
    throw TileError(ErrorKind::CertificateFailure, "unexpected irrational factor of degree above 3");
  }
  Rational lo, hi;
  const Rational width = Rational(1, 1) / Rational(BigInt(1) << 64);
  const bool has_irrational = rest.degree() >= 2 && isolate_largest_root(rest, width, lo, hi);
  if (has_irrational && best_rational) {
    // The rational root differs from the irrational one; refine until the
    // interval no longer contains it.
    Rational r = *best_rational;
    while (lo < r && r < hi) {
      Rational mid = (lo + hi) / 2;
      if (count_real_roots(rest, mid, hi) >= 1) lo = mid;
      else hi = mid;
    }
    if (r >= hi) return std::make_shared<AlgebraicField>(Poly({-r, Rational(1)}), r - 1, r);
    return std::make_shared<AlgebraicField>(rest, lo, hi);
  }
  if (has_irrational) return std::make_shared<AlgebraicField>(rest, lo, hi);
  if (best_rational) {
    const Rational r = *best_rational;
    return std::make_shared<AlgebraicField>(Poly({-r, Rational(1)}), r - 1, r);
  }
  throw TileError(ErrorKind::NotIrreducible, "no real eigenvalue found");
}

std::vector<std::vector<Rational>> to_rational_matrix(
    const std::array<std::array<std::int64_t, kContactStates>, kContactStates>& d) {
  std::vector<std::vector<Rational>> m(kContactStates, std::vector<Rational>(kContactStates));
  for (std::size_t i = 0; i < kContactStates; ++i) {
    for (std::size_t j = 0; j < kContactStates; ++j) m[i][j] = d[i][j];
  }
  return m;
}

}  // namespace

PerronData perron_data(const ContactGraph& graph) {
  if (!graph.strongly_connected()) {
    throw TileError(ErrorKind::NotIrreducible, "contact graph is not strongly connected");
  }
  if (!graph.flip_symmetric()) {
    throw TileError(ErrorKind::CertificateFailure, "contact graph lacks flip symmetry");
  }
  PerronData data;
  data.incidence = graph.incidence();
  data.characteristic = characteristic_polynomial(to_rational_matrix(data.incidence));

  // Quotient by the flip classes {K_i, K_{i+3}}: out-counts from K_i into a class.
  std::vector<std::vector<Rational>> quotient(3, std::vector<Rational>(3));
  for (const auto& e : graph.edges) {
    if (e.source < 3) quotient[static_cast<std::size_t>(e.source)][static_cast<std::size_t>(e.target % 3)] += 1;
  }
  data.field = dominant_root_field(characteristic_polynomial(quotient));
  const Poly& minimal = data.field->minimal_polynomial();
  if (!divmod(data.characteristic, minimal).second.is_zero()) {
    throw TileError(ErrorKind::CertificateFailure, "minimal polynomial does not divide charpoly(D)");
  }
  data.beta = QBeta::generator(data.field);
  if (data.field->degree() == 1) data.beta = QBeta::rational(data.field, -minimal.coeff(0));

  // Rows: sum_t D[t][s] u_t - beta u_s = 0 for each s, and sum_s u_s = 1.
  const std::size_t n = kContactStates;
  const QBeta zero = QBeta::rational(data.field, Rational(0));
  const QBeta one = QBeta::rational(data.field, Rational(1));
  std::vector<std::vector<QBeta>> rows;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<QBeta> row(n + 1, zero);
    for (std::size_t t = 0; t < n; ++t) row[t] = QBeta::rational(data.field, Rational(data.incidence[t][s]));
    row[s] = row[s] - data.beta;
    rows.push_back(std::move(row));
  }
  rows.push_back(std::vector<QBeta>(n + 1, one));

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const QBeta inv = rows[rank][c].inverse();
    for (auto& v : rows[rank]) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const QBeta f = rows[r][c];
      for (std::size_t k = 0; k <= n; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][n].is_zero()) throw TileError(ErrorKind::CertificateFailure, "inconsistent eigenvector system");
  }
  if (rank != n) {
    throw TileError(ErrorKind::NotIrreducible, "dominant eigenvalue is not simple");
  }
  for (std::size_t r = 0; r < n; ++r) data.u[pivot_col[r]] = rows[r][n];
  for (const auto& v : data.u) {
    if (v.sign() <= 0) throw TileError(ErrorKind::NotIrreducible, "left eigenvector is not positive");
  }
  if (!verify_perron(data)) throw TileError(ErrorKind::CertificateFailure, "Perron data failed its checks");
  return data;
}

bool verify_perron(const PerronData& data) {
  if (!data.field) return false;
  if (!divmod(data.characteristic, data.field->minimal_polynomial()).second.is_zero()) return false;
  const QBeta one = QBeta::rational(data.field, Rational(1));
  if (!(data.beta > one)) return false;
  QBeta sum = QBeta::rational(data.field, Rational(0));
  for (std::size_t s = 0; s < kContactStates; ++s) {
    if (data.u[s].sign() <= 0) return false;
    sum = sum + data.u[s];
    QBeta lhs = QBeta::rational(data.field, Rational(0));
    for (std::size_t t = 0; t < kContactStates; ++t) {
      lhs = lhs + QBeta::rational(data.field, Rational(data.incidence[t][s])) * data.u[t];
    }
    if (!(lhs == data.beta * data.u[s])) return false;
  }
  return sum == one;
}

std::string Walk::str() const {
  std::ostringstream os;
  os << start_state << ';';
  for (std::size_t i = 0; i < prefix.size(); ++i) os << (i ? "," : "") << prefix[i];
  if (!period.empty()) {
    if (!prefix.empty()) os << ',';
    os << '(';
    for (std::size_t i = 0; i < period.size(); ++i) os << (i ? "," : "") << period[i];
    os << ')';
  }
  return os.str();
}

Walk Walk::parse(std::string_view text) {
  auto fail = [&]() -> Walk { throw TileError(ErrorKind::ParseError, "bad walk: " + std::string(text)); };
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  const auto semi = s.find(';');
  if (semi == std::string::npos || semi == 0) return fail();
  Walk w;
  auto read_list = [&](const std::string& body, std::vector<int>& out) {
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t end = body.find(',', pos);
      if (end == std::string::npos) end = body.size();
      const std::string tok = body.substr(pos, end - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) fail();
      out.push_back(std::stoi(tok));
      pos = end + 1;
    }
  };
  const std::string head = s.substr(0, semi);
  if (head.find_first_not_of("0123456789") != std::string::npos) return fail();
  w.start_state = std::stoi(head);
  std::string body = s.substr(semi + 1);
  const auto open = body.find('(');
  if (open != std::string::npos) {
    if (body.back() != ')') return fail();
    std::string pre = body.substr(0, open);
    if (!pre.empty()) {
      if (pre.back() != ',') return fail();
      pre.pop_back();
    }
    read_list(pre, w.prefix);
    read_list(body.substr(open + 1, body.size() - open - 2), w.period);
    if (w.period.empty()) return fail();
  } else {
    read_list(body, w.prefix);
  }
  return w;
}

const ContactEdge& OrderedContactGraph::edge(int state, int letter) const {
  if (state < 0 || state >= kContactStates) throw TileError(ErrorKind::OutOfRange, "state out of range");
  const auto& o = order[static_cast<std::size_t>(state)];
  if (letter < 1 || static_cast<std::size_t>(letter) > o.size()) {
    throw TileError(ErrorKind::OutOfRange,
                    "letter " + std::to_string(letter) + " invalid at state " + std::to_string(state + 1));
  }
  return graph.edges[static_cast<std::size_t>(o[static_cast<std::size_t>(letter - 1)])];
}

namespace {

using Orders = std::array<std::vector<int>, kContactStates>;

/// Value of the walk from `start` that always takes edge choice[state].
RationalPoint constant_choice_value(const ContactGraph& g, int start, const std::array<int, kContactStates>& choice) {
  std::map<int, std::size_t> seen;
  DigitWord digits;
  int s = start;
  while (!seen.count(s)) {
    seen[s] = digits.size();
    const ContactEdge& e = g.edges[static_cast<std::size_t>(choice[static_cast<std::size_t>(s)])];
    digits.push_back(e.a);
    s = e.target;
  }
  const std::size_t k = seen[s];
  return point_eval(Address::fractional(DigitWord(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(k)),
                                        DigitWord(digits.begin() + static_cast<std::ptrdiff_t>(k), digits.end())),
                    g.params);
}

/// All Hamiltonian chains through the edges of `state` starting with `first_edge`.
std::vector<std::vector<int>> chains_for_state(const ContactGraph& g, int state, int first_edge,
                                               const std::array<RationalPoint, kContactStates>& first) {
  const auto& es = g.out[static_cast<std::size_t>(state)];
  const RationalPoint& target_last = first[static_cast<std::size_t>((state + 1) % kContactStates)];
  std::vector<RationalPoint> sp, ep;
  for (int k : es) {
    const ContactEdge& e = g.edges[static_cast<std::size_t>(k)];
    sp.push_back(apply_contraction(e.a, first[static_cast<std::size_t>(e.target)], g.params));
    ep.push_back(apply_contraction(e.a, first[static_cast<std::size_t>((e.target + 1) % kContactStates)], g.params));
  }
  std::vector<std::vector<int>> result;
  const auto pos = static_cast<std::size_t>(std::find(es.begin(), es.end(), first_edge) - es.begin());
  std::vector<std::size_t> path{pos};
  std::vector<bool> used(es.size(), false);
  used[pos] = true;
  auto bt = [&](auto&& self) -> void {
    if (path.size() == es.size()) {
      if (ep[path.back()] == target_last) {
        std::vector<int> o;
        for (std::size_t p : path) o.push_back(es[p]);
        result.push_back(std::move(o));
      }
      return;
    }
    for (std::size_t k = 0; k < es.size(); ++k) {
      if (used[k] || !(sp[k] == ep[path.back()])) continue;
      used[k] = true;
      path.push_back(k);
      self(self);
      path.pop_back();
      used[k] = false;
    }
  };
  bt(bt);
  return result;
}

void collect_orders(const ContactGraph& g, const std::array<int, kContactStates>& choice,
                    std::vector<Orders>& out) {
  std::array<RationalPoint, kContactStates> first;
  for (int i = 0; i < kContactStates; ++i) first[static_cast<std::size_t>(i)] = constant_choice_value(g, i, choice);
  std::array<std::vector<std::vector<int>>, kContactStates> per_state;
  for (int i = 0; i < kContactStates; ++i) {
    per_state[static_cast<std::size_t>(i)] = chains_for_state(g, i, choice[static_cast<std::size_t>(i)], first);
    if (per_state[static_cast<std::size_t>(i)].empty()) return;
  }
  Orders cur;
  auto expand = [&](auto&& self, std::size_t i) -> void {
    if (i == kContactStates) {
      out.push_back(cur);
      return;
    }
    for (const auto& o : per_state[i]) {
      cur[i] = o;
      self(self, i + 1);
    }
  };
  expand(expand, 0);
}

bool calibrated(const ContactGraph& g, const Orders& orders) {
  OrderedContactGraph og;
  og.graph = g;
  og.order = orders;
  const auto& p = g.params;
  const int ba = static_cast<int>(p.b - p.a);
  const Digit top = p.max_digit();
  try {
    // Row alpha_B, left endpoint: (3; 2(B-A), 1, 2(B-A)+1, (2)).
    Walk w1{3, {2 * ba, 1, 2 * ba + 1}, {2}};
    Address e1 = Address::fractional({top, top, 0}, {0, top});
    // Row alpha_{B-1}: (5; 2, (2A-2)).
    Walk w2{5, {2}, {static_cast<int>(2 * p.a - 2)}};
    Address e2 = Address::fractional({top}, {static_cast<Digit>(p.a - 2)});
    return psi(w1, og) == e1 && psi(w2, og) == e2;
  } catch (const TileError&) {
    return false;
  }
}

}  // namespace

std::vector<Orders> consistent_orders(const ContactGraph& graph, bool flip_seeded) {
  std::vector<Orders> result;
  std::array<int, kContactStates> choice{};
  constexpr std::size_t kMaxCombinations = 1000000;
  std::size_t combos = 1;
  const int free_states = flip_seeded ? 3 : kContactStates;
  for (int i = 0; i < free_states; ++i) combos *= graph.out[static_cast<std::size_t>(i)].size();
  if (combos > kMaxCombinations) {
    throw TileError(ErrorKind::BudgetExceeded, "too many first-edge combinations");
  }
  auto rec = [&](auto&& self, int i) -> void {
    if (i == free_states) {
      if (flip_seeded) {
        for (int k = 0; k < 3; ++k) {
          int f = graph.flipped_edge(choice[static_cast<std::size_t>(k)]);
          if (f < 0) return;
          choice[static_cast<std::size_t>(k + 3)] = f;
        }
      }
      collect_orders(graph, choice, result);
      return;
    }
    for (int e : graph.out[static_cast<std::size_t>(i)]) {
      choice[static_cast<std::size_t>(i)] = e;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

OrderedContactGraph derive_order_extension(const ContactGraph& graph) {
  std::vector<Orders> candidates = consistent_orders(graph, true);
  if (candidates.empty()) candidates = consistent_orders(graph, false);
  if (candidates.empty()) {
    throw TileError(ErrorKind::NoConsistentOrdering, "no edge order satisfies the continuity constraints");
  }
  const TileParams& p = graph.params;
  if (p.regime() == 3 && p.a != p.b) {
    std::vector<Orders> kept;
    for (const auto& o : candidates) {
      if (calibrated(graph, o)) kept.push_back(o);
    }
    if (kept.empty()) {
      throw TileError(ErrorKind::NoConsistentOrdering, "no consistent order reproduces the endpoint table");
    }
    candidates = std::move(kept);
  }
  OrderedContactGraph og;
  og.graph = graph;
  og.order = candidates.front();  // sorted, so lexicographically smallest
  for (int i = 0; i < kContactStates; ++i) {
    og.first[static_cast<std::size_t>(i)] = point_eval(psi(Walk{i + 1, {}, {1}}, og), p);
  }
  if (!verify_order(og)) throw TileError(ErrorKind::NoConsistentOrdering, "selected order fails re-verification");
  return og;
}

bool verify_order(const OrderedContactGraph& og) {
  const TileParams& p = og.graph.params;
  std::array<RationalPoint, kContactStates> first, last;
  for (int i = 0; i < kContactStates; ++i) {
    first[static_cast<std::size_t>(i)] = point_eval(psi(Walk{i + 1, {}, {1}}, og), p);
  }
  std::array<int, kContactStates> max_choice{};
  for (int i = 0; i < kContactStates; ++i) {
    if (og.order[static_cast<std::size_t>(i)].empty()) return false;
    max_choice[static_cast<std::size_t>(i)] = og.order[static_cast<std::size_t>(i)].back();
  }
  for (int i = 0; i < kContactStates; ++i) {
    last[static_cast<std::size_t>(i)] = constant_choice_value(og.graph, i, max_choice);
  }
  for (int i = 0; i < kContactStates; ++i) {
    if (!(first[static_cast<std::size_t>(i)] == og.first[static_cast<std::size_t>(i)])) return false;
    if (!(last[static_cast<std::size_t>(i)] == first[static_cast<std::size_t>((i + 1) % kContactStates)])) return false;
    std::vector<int> sorted = og.order[static_cast<std::size_t>(i)];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != og.graph.out[static_cast<std::size_t>(i)]) return false;
    for (std::size_t k = 0; k + 1 < og.out_degree(i); ++k) {
      const ContactEdge& e = og.edge(i, static_cast<int>(k + 1));
      const ContactEdge& f = og.edge(i, static_cast<int>(k + 2));
      if (!(apply_contraction(e.a, last[static_cast<std::size_t>(e.target)], p) ==
            apply_contraction(f.a, first[static_cast<std::size_t>(f.target)], p))) {
        return false;
      }
    }
  }
  return true;
}

DigitWord walk_digits(const Walk& walk, const OrderedContactGraph& og) {
  if (walk.infinite()) throw TileError(ErrorKind::OutOfRange, "walk_digits expects a finite walk");
  DigitWord out;
  int s = walk.start_state - 1;
  if (s < 0 || s >= kContactStates) throw TileError(ErrorKind::OutOfRange, "start state out of range");
  for (int letter : walk.prefix) {
    const ContactEdge& e = og.edge(s, letter);
    out.push_back(e.a);
    s = e.target;
  }
  return out;
}

Address psi(const Walk& walk, const OrderedContactGraph& og) {
  if (!walk.infinite()) throw TileError(ErrorKind::OutOfRange, "psi expects an infinite walk");
  int s = walk.start_state - 1;
  if (s < 0 || s >= kContactStates) throw TileError(ErrorKind::OutOfRange, "start state out of range");
  DigitWord digits;
  for (int letter : walk.prefix) {
    const ContactEdge& e = og.edge(s, letter);
    digits.push_back(e.a);
    s = e.target;
  }
  // Repeat the period until the state at a period boundary recurs.
  std::map<int, std::size_t> seen;
  while (!seen.count(s)) {
    seen[s] = digits.size();
    for (int letter : walk.period) {
      const ContactEdge& e = og.edge(s, letter);
      digits.push_back(e.a);
      s = e.target;
    }
  }
  const auto k = static_cast<std::ptrdiff_t>(seen[s]);
  return Address::fractional(DigitWord(digits.begin(), digits.begin() + k), DigitWord(digits.begin() + k, digits.end()));
}

}  // namespace tiletopo
