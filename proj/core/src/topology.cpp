#include "tiletopo/topology.hpp"

#include "tiletopo/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace tiletopo {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::DiskLike: return "DiskLike";
    case Classification::NoCutPointInteriorDisconnected: return "NoCutPointInteriorDisconnected";
    case Classification::HasCutPoint: return "HasCutPoint";
    case Classification::DegenerateRectangle: return "DegenerateRectangle";
    case Classification::SquareSpecialCase: return "SquareSpecialCase";
  }
  return "?";
}

std::string_view to_string(IntersectionKind k) {
  switch (k) {
    case IntersectionKind::Empty: return "EMPTY";
    case IntersectionKind::UniquePoint: return "UNIQUE_POINT";
    case IntersectionKind::FinitePoints: return "FINITE_POINTS";
    case IntersectionKind::Branching: return "BRANCHING";
  }
  return "?";
}

Classification classify(const TileParams& params) {
  if (params.a == 0) return Classification::DegenerateRectangle;
  if (params.a == 4 && params.b == 4) return Classification::SquareSpecialCase;
  const std::int64_t r = params.regime();
  if (r <= 2) return Classification::DiskLike;
  if (r <= 4) return Classification::NoCutPointInteriorDisconnected;
  return Classification::HasCutPoint;
}

namespace {

void require_cut_regime(const TileParams& params) {
  if (params.regime() < 5) {
    throw TileError(ErrorKind::WrongRegime, "cut point construction needs 2A-B >= 5");
  }
}

Vec2i step(const TileParams& p, Vec2i s, Digit a, Digit a_prime) {
  return {-p.b * s.y + (a_prime - a), s.x - p.a * s.y};
}

}  // namespace

Address cut_point_address(const TileParams& params) {
  require_cut_regime(params);
  const auto c = static_cast<Digit>(params.a - 3);
  return Address::fractional({}, {c, params.max_digit() - c});
}

std::pair<LexGifs, LexGifs> build_d1_d2(const TileParams& params) {
  require_cut_regime(params);
  const auto c = static_cast<Digit>(params.a - 3);
  const Digit c_odd = params.max_digit() - c;
  auto make = [&](bool upper) {
    LexGifs g;
    g.upper = upper;
    g.even_digit = c;
    g.odd_digit = c_odd;
    DigitAutomaton& m = g.automaton = DigitAutomaton(static_cast<int>(params.b));
    m.add_state();
    m.add_state();
    m.add_state();
    m.set_initial(LexGifs::kTightEven);
    for (Digit d = 0; d < params.b; ++d) {
      m.set_transition(LexGifs::kFree, d, LexGifs::kFree);
      // Even positions compare d with c directly; odd positions compare the
      // flipped digit B-1-d with c, i.e. d with c_odd reversed.
      const bool even_free = upper ? d > c : d < c;
      const bool odd_free = upper ? d < c_odd : d > c_odd;
      if (d == c) m.set_transition(LexGifs::kTightEven, d, LexGifs::kTightOdd);
      else if (even_free) m.set_transition(LexGifs::kTightEven, d, LexGifs::kFree);
      if (d == c_odd) m.set_transition(LexGifs::kTightOdd, d, LexGifs::kTightEven);
      else if (odd_free) m.set_transition(LexGifs::kTightOdd, d, LexGifs::kFree);
    }
    return g;
  };
  return {make(false), make(true)};
}

IntersectionAutomaton intersect_languages(const DigitAutomaton& l1, const DigitAutomaton& l2,
                                          const TileParams& params, Vec2i s0) {
  return intersect_languages(l1, l2, params, neighbor_set_formula(params), s0);
}

IntersectionAutomaton intersect_languages(const DigitAutomaton& l1, const DigitAutomaton& l2,
                                          const TileParams& params, const NeighborSet& set, Vec2i s0,
                                          std::size_t run_limit) {
  IntersectionAutomaton out;
  out.start = s0;
  const DigitAutomaton x = l1.trimmed(), y = l2.trimmed();
  if (x.is_empty() || y.is_empty() || !set.contains_or_zero(s0)) return out;

  // Exploration of every reachable product state.
  std::map<ProductState, int> raw_id;
  std::vector<ProductState> raw;
  std::vector<std::vector<ProductTransition>> raw_out;
  std::deque<int> queue;
  auto get = [&](const ProductState& st) {
    auto it = raw_id.find(st);
    if (it != raw_id.end()) return it->second;
    const int id = static_cast<int>(raw.size());
    raw_id.emplace(st, id);
    raw.push_back(st);
    raw_out.emplace_back();
    queue.push_back(id);
    return id;
  };
  get({x.initial(), y.initial(), s0});
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const ProductState st = raw[static_cast<std::size_t>(id)];
    for (Digit a = 0; a < params.b; ++a) {
      const int n1 = x.next(st.q1, a);
      if (n1 < 0) continue;
      for (Digit b = 0; b < params.b; ++b) {
        const int n2 = y.next(st.q2, b);
        if (n2 < 0) continue;
        const Vec2i s = step(params, st.s, a, b);
        if (!set.contains_or_zero(s)) continue;
        const int to = get({n1, n2, s});
        raw_out[static_cast<std::size_t>(id)].push_back({id, a, b, to});
      }
    }
  }
  out.reachable_states = raw.size();

  // Keep states with an infinite continuation.
  const std::size_t n = raw.size();
  std::vector<bool> live(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (!live[q]) continue;
      bool any = false;
      for (const auto& t : raw_out[q]) any = any || live[static_cast<std::size_t>(t.to)];
      if (!any) {
        live[q] = false;
        changed = true;
      }
    }
  }
  if (!live[0]) return out;

  std::vector<int> order;
  for (std::size_t q = 0; q < n; ++q) {
    if (live[q]) order.push_back(static_cast<int>(q));
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return raw[static_cast<std::size_t>(a)] < raw[static_cast<std::size_t>(b)];
  });
  std::vector<int> id(n, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    id[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    out.states.push_back(raw[static_cast<std::size_t>(order[k])]);
  }
  out.initial = id[0];
  std::vector<std::vector<int>> succ(order.size());  // transition indices
  for (int q : order) {
    for (const auto& t : raw_out[static_cast<std::size_t>(q)]) {
      if (!live[static_cast<std::size_t>(t.to)]) continue;
      out.transitions.push_back({id[static_cast<std::size_t>(q)], t.a, t.a_prime, id[static_cast<std::size_t>(t.to)]});
    }
  }
  std::sort(out.transitions.begin(), out.transitions.end(), [](const auto& p, const auto& q) {
    return std::tie(p.from, p.a, p.a_prime) < std::tie(q.from, q.a, q.a_prime);
  });
  for (std::size_t k = 0; k < out.transitions.size(); ++k) {
    succ[static_cast<std::size_t>(out.transitions[k].from)].push_back(static_cast<int>(k));
  }

  // Strongly connected components (Tarjan, iterative-safe sizes are small).
  const std::size_t m = out.states.size();
  std::vector<int> index(m, -1), low(m, 0), comp(m, -1);
  std::vector<bool> on_stack(m, false);
  std::vector<int> stack;
  int counter = 0, comps = 0;
  std::function<void(int)> strong = [&](int v) {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = true;
    for (int k : succ[static_cast<std::size_t>(v)]) {
      const int w = out.transitions[static_cast<std::size_t>(k)].to;
      if (index[static_cast<std::size_t>(w)] < 0) {
        strong(w);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      } else if (on_stack[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
      while (true) {
        const int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp[static_cast<std::size_t>(w)] = comps;
        if (w == v) break;
      }
      ++comps;
    }
  };
  for (std::size_t v = 0; v < m; ++v) {
    if (index[v] < 0) strong(static_cast<int>(v));
  }
  std::vector<int> comp_size(static_cast<std::size_t>(comps), 0);
  for (int c : comp) ++comp_size[static_cast<std::size_t>(c)];
  std::vector<bool> cyclic(m, false);
  for (std::size_t v = 0; v < m; ++v) {
    if (comp_size[static_cast<std::size_t>(comp[v])] > 1) cyclic[v] = true;
    for (int k : succ[v]) {
      if (out.transitions[static_cast<std::size_t>(k)].to == static_cast<int>(v)) cyclic[v] = true;
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (cyclic[v] && succ[v].size() >= 2) out.branching_states.push_back(static_cast<int>(v));
  }
  if (!out.branching_states.empty()) {
    out.kind = IntersectionKind::Branching;
    return out;
  }

  // Finitely many runs: enumerate them through the acyclic part.
  std::vector<std::pair<Digit, Digit>> path;
  auto emit = [&](int q) {
    std::vector<std::pair<Digit, Digit>> cycle;
    int v = q;
    do {
      const auto& t = out.transitions[static_cast<std::size_t>(succ[static_cast<std::size_t>(v)].front())];
      cycle.push_back({t.a, t.a_prime});
      v = t.to;
    } while (v != q);
    DigitWord xp, yp, xc, yc;
    for (auto [a, b] : path) {
      xp.push_back(a);
      yp.push_back(b);
    }
    for (auto [a, b] : cycle) {
      xc.push_back(a);
      yc.push_back(b);
    }
    IntersectionRun run{Address::fractional(xp, xc), Address::fractional(yp, yc), {}};
    run.value = point_eval(run.x, params);
    const RationalPoint shifted = point_eval(run.y, params) + RationalPoint{Rational(s0.x), Rational(s0.y)};
    if (!(shifted == run.value)) {
      throw TileError(ErrorKind::CertificateFailure, "run addresses disagree in value");
    }
    out.runs.push_back(std::move(run));
  };
  std::function<void(int)> walk = [&](int q) {
    if (out.runs.size() >= run_limit) {
      out.run_limit_hit = true;
      return;
    }
    if (cyclic[static_cast<std::size_t>(q)]) {
      emit(q);
      return;
    }
    for (int k : succ[static_cast<std::size_t>(q)]) {
      const auto& t = out.transitions[static_cast<std::size_t>(k)];
      path.push_back({t.a, t.a_prime});
      walk(t.to);
      path.pop_back();
    }
  };
  walk(out.initial);
  for (const auto& r : out.runs) out.points.push_back(r.value);
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  out.kind = out.points.size() == 1 ? IntersectionKind::UniquePoint : IntersectionKind::FinitePoints;
  return out;
}

namespace {

using PrefixLevel = std::map<std::pair<DigitWord, DigitWord>, ProductState>;

PrefixLevel extend(const PrefixLevel& level, const DigitAutomaton& x, const DigitAutomaton& y,
                   const TileParams& params, const NeighborSet& set) {
  PrefixLevel next;
  for (const auto& [words, st] : level) {
    for (Digit a = 0; a < params.b; ++a) {
      const int n1 = x.next(st.q1, a);
      if (n1 < 0) continue;
      for (Digit b = 0; b < params.b; ++b) {
        const int n2 = y.next(st.q2, b);
        if (n2 < 0) continue;
        const Vec2i s = step(params, st.s, a, b);
        if (!set.contains_or_zero(s)) continue;
        auto key = words;
        key.first.push_back(a);
        key.second.push_back(b);
        next.emplace(std::move(key), ProductState{n1, n2, s});
      }
    }
  }
  return next;
}

}  // namespace

std::set<std::pair<DigitWord, DigitWord>> reachable_prefix_pairs(const DigitAutomaton& l1,
                                                                const DigitAutomaton& l2,
                                                                const TileParams& params,
                                                                const NeighborSet& set, std::size_t n,
                                                                Vec2i s0) {
  const DigitAutomaton x = l1.trimmed(), y = l2.trimmed();
  std::set<std::pair<DigitWord, DigitWord>> out;
  if (x.is_empty() || y.is_empty() || !set.contains_or_zero(s0)) return out;
  PrefixLevel level{{{{}, {}}, ProductState{x.initial(), y.initial(), s0}}};
  for (std::size_t k = 0; k < n; ++k) level = extend(level, x, y, params, set);
  for (const auto& [words, st] : level) out.insert(words);
  return out;
}

GnReplay replay_gn(const TileParams& params, int depth) {
  require_cut_regime(params);
  GnReplay report;
  report.depth = depth;
  const auto [d1, d2] = build_d1_d2(params);
  const NeighborSet set = neighbor_set_formula(params);
  const DigitAutomaton x = d1.automaton.trimmed(), y = d2.automaton.trimmed();
  const auto c = static_cast<Digit>(params.a - 3);
  auto in_gn = [&](const DigitWord& w, std::int64_t n) {
    for (std::int64_t k = 0; k < n; ++k) {
      if (w[static_cast<std::size_t>(k)] != alt_flip(k, c, params)) return false;
    }
    const Digit last = w[static_cast<std::size_t>(n)];
    for (Digit cc : {c - 1, c, c + 1}) {
      if (last == alt_flip(n, cc, params)) return true;
    }
    return false;
  };
  PrefixLevel level{{{{}, {}}, ProductState{x.initial(), y.initial(), {0, 0}}}};
  for (int n = 0; n <= depth; ++n) {
    level = extend(level, x, y, params, set);
    report.pairs_per_depth.push_back(level.size());
    if (level.empty()) {
      report.failure = "no reachable prefix pair at depth " + std::to_string(n + 1);
      return report;
    }
    for (const auto& [words, st] : level) {
      if (!in_gn(words.first, n) || !in_gn(words.second, n)) {
        report.failure = "prefix pair outside G_" + std::to_string(n);
        return report;
      }
      if (!subdivision_intersects(words.first, words.second, params, set)) {
        report.failure = "difference-state tracking disagrees with the subdivision test";
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

CutPointCertificate verify_cut_point(const TileParams& params, int replay_depth) {
  require_cut_regime(params);
  CutPointCertificate cert;
  cert.params = params;
  cert.z = cut_point_address(params);
  cert.value = point_eval(cert.z, params);
  const auto [d1, d2] = build_d1_d2(params);
  cert.union_universal = unite(d1.automaton, d2.automaton).is_universal();
  if (!cert.union_universal) throw TileError(ErrorKind::CertificateFailure, "D1 and D2 do not cover all words");
  if (!d1.automaton.accepts(cert.z) || !d2.automaton.accepts(cert.z)) {
    throw TileError(ErrorKind::CertificateFailure, "z is not in both halves");
  }
  cert.automaton = intersect_languages(d1.automaton, d2.automaton, params);
  if (cert.automaton.kind != IntersectionKind::UniquePoint) {
    throw TileError(ErrorKind::CertificateFailure,
                    "D1 and D2 meet in " + std::string(to_string(cert.automaton.kind)));
  }
  if (!(cert.automaton.points.front() == cert.value)) {
    throw TileError(ErrorKind::CertificateFailure, "the common point differs from z");
  }
  cert.replay = replay_gn(params, replay_depth);
  if (!cert.replay.ok) throw TileError(ErrorKind::CertificateFailure, cert.replay.failure);
  return cert;
}

}  // namespace tiletopo
