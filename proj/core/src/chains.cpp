#include "tiletopo/chains.hpp"

#include "tiletopo/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tiletopo {

namespace {

void require_chain_regime(const TileParams& params) {
  if (params.regime() != 3 || params.a == params.b) {
    throw TileError(ErrorKind::WrongRegime, "the alpha curves need 2A-B = 3 and A != B");
  }
}

Walk walk(int state, std::vector<int> prefix, std::vector<int> period) {
  return Walk{state, std::move(prefix), std::move(period)};
}

DigitWord cat(std::initializer_list<DigitWord> parts) {
  DigitWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

DigitWord power(const DigitWord& w, int p) {
  DigitWord out;
  for (int k = 0; k < p; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::string pair_name(const std::vector<std::string>& names, std::size_t i, std::size_t j) {
  return names[i] + " & " + names[j];
}

}  // namespace

std::vector<std::pair<Walk, Walk>> alpha_table(const TileParams& params) {
  require_chain_regime(params);
  const int a = static_cast<int>(params.a), b = static_cast<int>(params.b), ba = b - a;
  std::vector<std::pair<Walk, Walk>> rows;
  for (int i = 1; i <= b; ++i) {
    if (i <= ba - 1) {
      const int o = 2 * (ba - i);
      rows.push_back({walk(6, {o, 1, b - 2}, {2}), walk(6, {o + 1, 2 * a - 2, 4}, {2})});
    } else if (i == ba) {
      rows.push_back({walk(5, {2 * a - 1, 1, b - 2}, {2}), walk(6, {1, 2 * a - 2, 4}, {2})});
    } else if (i <= b - 2) {
      const int j = i - (ba + 1);
      rows.push_back({walk(5, {2 * a - 3 - 2 * j, 1, b - 2}, {2}), walk(5, {2 * a - 2 - 2 * j, 2 * a - 2, 4}, {2})});
    } else if (i == b - 1) {
      rows.push_back({walk(5, {2}, {2 * a - 2}), walk(5, {2, 2 * a - 2, 4}, {2})});
    } else {
      rows.push_back({walk(3, {2 * ba, 1, 2 * ba + 1}, {2}), walk(3, {2 * ba + 1}, {2 * a - 2})});
    }
  }
  return rows;
}

std::string AlphaCurve::name() const {
  return "alpha_" + std::to_string(index) + (flipped ? "'" : "");
}

Walk swap_states(const Walk& w) {
  Walk out = w;
  out.start_state = (w.start_state - 1 + 3) % kContactStates + 1;
  return out;
}

AlphaCurve alpha_curve(const OrderedContactGraph& og, int index, const Walk& s, const Walk& t) {
  AlphaCurve c;
  c.index = index;
  c.s_walk = s;
  c.t_walk = t;
  const bool ordered = compare_walks(s, t) <= 0;
  c.lo = ordered ? s : t;
  c.hi = ordered ? t : s;
  c.s_address = psi(s, og);
  c.t_address = psi(t, og);
  c.language = walk_interval_language(og, c.lo, c.hi);
  return c;
}

AlphaCurve flip_curve(const AlphaCurve& curve, const OrderedContactGraph& og) {
  const TileParams& p = og.graph.params;
  const Digit top = p.max_digit();
  AlphaCurve c;
  c.index = curve.index;
  c.flipped = !curve.flipped;
  c.s_walk = swap_states(curve.s_walk);
  c.t_walk = swap_states(curve.t_walk);
  const bool ordered = compare_walks(c.s_walk, c.t_walk) <= 0;
  c.lo = ordered ? c.s_walk : c.t_walk;
  c.hi = ordered ? c.t_walk : c.s_walk;
  c.s_address = flip(curve.s_address, p);
  c.t_address = flip(curve.t_address, p);
  c.language = curve.language.map_digits([top](Digit d) { return top - d; });
  return c;
}

CurveSystem build_curve_system(const TileParams& params) {
  const auto rows = alpha_table(params);
  CurveSystem sys;
  sys.params = params;
  sys.ordered = derive_order_extension(build_contact_graph(params));
  sys.neighbors = neighbor_set_formula(params);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    sys.alpha.push_back(alpha_curve(sys.ordered, static_cast<int>(i + 1), rows[i].first, rows[i].second));
    if (sys.alpha.back().language.is_empty()) {
      throw TileError(ErrorKind::ChainViolation, sys.alpha.back().name() + " has an empty language");
    }
  }
  for (const auto& c : sys.alpha) sys.alpha_prime.push_back(flip_curve(c, sys.ordered));
  return sys;
}

FlipCoherence check_flip_coherence(const CurveSystem& sys) {
  FlipCoherence out;
  const RationalPoint top = point_eval(Address::fractional({}, {sys.params.max_digit()}), sys.params);
  for (std::size_t i = 0; i < sys.alpha.size(); ++i) {
    const AlphaCurve& c = sys.alpha[i];
    const AlphaCurve& f = sys.alpha_prime[i];
    const DigitAutomaton by_walks = walk_interval_language(sys.ordered, f.lo, f.hi);
    if (!equivalent(by_walks, f.language)) out.languages_agree = false;
    for (const auto& [w, addr] : {std::pair{c.s_walk, c.s_address}, std::pair{c.t_walk, c.t_address}}) {
      const Address swapped = psi(swap_states(w), sys.ordered);
      if (!(point_eval(swapped, sys.params) == top - point_eval(addr, sys.params))) out.endpoints_reflect = false;
    }
  }
  return out;
}

bool alpha_languages_in_boundary(const CurveSystem& sys) {
  const DigitAutomaton g = boundary_language(sys.ordered.graph, {0, 1, 2, 3, 4, 5});
  for (const auto* list : {&sys.alpha, &sys.alpha_prime}) {
    for (const auto& c : *list) {
      if (!includes(g, c.language)) return false;
    }
  }
  return true;
}

ChainReport chain_report(const std::vector<AlphaCurve>& curves, const TileParams& params,
                         const NeighborSet& set, bool circular) {
  ChainReport rep;
  rep.circular = circular;
  const std::size_t n = curves.size();
  for (const auto& c : curves) rep.names.push_back(c.name());
  rep.matrix.assign(n, std::vector<ChainEntry>(n));
  auto adjacent = [&](std::size_t i, std::size_t j) {
    return j == i + 1 || (circular && i == 0 && j == n - 1);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const IntersectionAutomaton ia = intersect_languages(curves[i].language, curves[j].language, params, set);
      ChainEntry& e = rep.matrix[i][j];
      e.kind = ia.kind;
      e.points = ia.points;
      if (!ia.runs.empty()) e.witness = ia.runs.front();
      if (adjacent(i, j)) {
        if (e.kind != IntersectionKind::UniquePoint) {
          rep.violations.push_back(pair_name(rep.names, i, j) + ": expected one point, got " +
                                   std::string(to_string(e.kind)));
        }
      } else if (e.kind != IntersectionKind::Empty) {
        std::string msg = pair_name(rep.names, i, j) + ": expected EMPTY, got " + std::string(to_string(e.kind));
        if (e.witness) msg += " (" + e.witness->x.str() + " = " + e.witness->y.str() + ")";
        rep.violations.push_back(msg);
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& e = rep.matrix[i][i + 1];
    if (e.points.size() == 1) rep.junctions.push_back(e.points.front());
  }
  if (circular && n > 1 && rep.matrix[0][n - 1].points.size() == 1) {
    rep.junctions.push_back(rep.matrix[0][n - 1].points.front());
  }
  return rep;
}

std::vector<Address> expected_junction(const TileParams& params, int k) {
  require_chain_regime(params);
  const Digit a = static_cast<Digit>(params.a), b = static_cast<Digit>(params.b), t = b - 1;
  auto fr = [](DigitWord pre, DigitWord per) { return Address::fractional(std::move(pre), std::move(per)); };
  if (k >= b && k <= 2 * b - 2) {
    std::vector<Address> out;
    for (const auto& x : expected_junction(params, k - b)) out.push_back(flip(x, params));
    return out;
  }
  if (k <= b - 3) {
    const Digit i = k + 1;
    return {fr({i + 1, a - 2, b - 2}, {0, t}), fr({i, 0, t}, {t, 0})};
  }
  if (k == b - 2) return {fr({t}, {a - 2}), fr({t}, {a - 2, b - a + 1})};
  if (k == b - 1) return {fr({t, t, 0}, {0, t}), fr({b - 2, a - 2, 1}, {t, 0}), fr({b - 2, b - a + 1, 1}, {t, 0})};
  if (k == 2 * b - 1) return {fr({0, 0, t}, {t, 0}), fr({1, a - 2, b - 2}, {0, t})};
  throw TileError(ErrorKind::OutOfRange, "junction index out of range");
}

namespace {

/// Compares the adjacent junctions of `rep` against the expected addresses
/// starting at circular index `offset`.
void check_junction_values(ChainReport& rep, const TileParams& params, int offset, bool circular) {
  const int n = static_cast<int>(rep.names.size());
  const int pairs = circular ? n : n - 1;
  for (int k = 0; k < pairs; ++k) {
    const auto i = static_cast<std::size_t>(k < n - 1 ? k : 0);
    const auto j = static_cast<std::size_t>(k < n - 1 ? k + 1 : n - 1);
    const auto& e = rep.matrix[i][j];
    const auto expected = expected_junction(params, offset + k);
    const RationalPoint v = point_eval(expected.front(), params);
    for (const auto& x : expected) {
      if (!(point_eval(x, params) == v)) {
        throw TileError(ErrorKind::IdentityFailure, "junction addresses " + expected.front().str() + " and " +
                                                        x.str() + " differ in value");
      }
    }
    if (e.points.size() == 1 && !(e.points.front() == v)) {
      rep.violations.push_back(pair_name(rep.names, i, j) + ": common point is not 0." + expected.front().str());
    }
  }
}

void throw_if_violated(const ChainReport& rep) {
  if (rep.ok()) return;
  std::ostringstream msg;
  for (const auto& v : rep.violations) msg << v << "; ";
  throw TileError(ErrorKind::ChainViolation, msg.str());
}

}  // namespace

ChainReport verify_chain(const CurveSystem& sys) {
  ChainReport rep = chain_report(sys.alpha, sys.params, sys.neighbors, false);
  check_junction_values(rep, sys.params, 0, false);
  throw_if_violated(rep);
  return rep;
}

ChainReport verify_prime_chain(const CurveSystem& sys) {
  ChainReport rep = chain_report(sys.alpha_prime, sys.params, sys.neighbors, false);
  check_junction_values(rep, sys.params, static_cast<int>(sys.params.b), false);
  throw_if_violated(rep);
  return rep;
}

ChainReport verify_circular_chain(const CurveSystem& sys) {
  std::vector<AlphaCurve> all = sys.alpha;
  all.insert(all.end(), sys.alpha_prime.begin(), sys.alpha_prime.end());
  ChainReport rep = chain_report(all, sys.params, sys.neighbors, true);
  check_junction_values(rep, sys.params, 0, true);
  throw_if_violated(rep);
  return rep;
}

GammaReport gamma_arcs(const CurveSystem& sys, const std::vector<RationalPoint>& junctions) {
  const TileParams& p = sys.params;
  const Digit a = static_cast<Digit>(p.a), b = static_cast<Digit>(p.b), t = b - 1;
  GammaReport rep;
  const DigitAutomaton tail = unite(sys.alpha[static_cast<std::size_t>(b - 2)].language,
                                    sys.alpha[static_cast<std::size_t>(b - 1)].language)
                                  .after(t);
  // Endpoints of alpha_{B-1} u alpha_B: C(t_{B-1}) and C(s_B).
  const Address end1 = sys.alpha[static_cast<std::size_t>(b - 2)].t_address;
  const Address end2 = sys.alpha[static_cast<std::size_t>(b - 1)].s_address;
  auto in_junctions = [&](const RationalPoint& v) {
    return std::find(junctions.begin(), junctions.end(), v) != junctions.end();
  };
  for (Digit i = 1; i <= b - 2; ++i) {
    GammaArc arc;
    arc.index = i;
    arc.language = tail.prepend(i);
    arc.first_end = Address::fractional({i, a - 2, b - 2}, {0, t});
    arc.second_end = Address::fractional({i, t, 0}, {0, t});
    arc.through = Address::fractional({i}, {a - 2});
    const std::string name = "gamma_" + std::to_string(i);
    if (end1.digit_at(0) != t || end2.digit_at(0) != t) {
      rep.violations.push_back("endpoints of alpha_{B-1} u alpha_B do not start with B-1");
    }
    const RationalPoint e1 = point_eval(end1.shift().prepend(i), p);
    const RationalPoint e2 = point_eval(end2.shift().prepend(i), p);
    if (!(e1 == point_eval(arc.first_end, p))) rep.violations.push_back(name + ": first endpoint value");
    if (!(e2 == point_eval(arc.second_end, p))) rep.violations.push_back(name + ": second endpoint value");
    if (!arc.language.accepts(arc.first_end) || !arc.language.accepts(arc.second_end)) {
      rep.violations.push_back(name + ": endpoint address not in the arc language");
    }
    if (!arc.language.accepts(arc.through)) rep.violations.push_back(name + ": misses 0." + arc.through.str());
    if (!in_junctions(e1) || !in_junctions(e2)) rep.violations.push_back(name + ": endpoint not on the closed chain");
    rep.arcs.push_back(std::move(arc));
  }

  const ContactGraph& g = sys.ordered.graph;
  auto k = [&](int state) { return boundary_language(g, {state - 1}); };
  auto fact = [&](const std::string& text, bool holds) {
    rep.facts.push_back({text, holds});
    if (!holds) rep.violations.push_back("containment fails: " + text);
  };
  fact("alpha_{B-1} < 0.(B-1)[K2]", includes(k(2).prepend(t), sys.alpha[static_cast<std::size_t>(b - 2)].language));
  auto digit_fact = [&](Digit i, int from, int into) {
    fact("0." + std::to_string(i) + "[K" + std::to_string(from) + "] < K" + std::to_string(into),
         includes(k(into), k(from).prepend(i)));
  };
  for (Digit i = 0; i < b; ++i) digit_fact(i, 2, i <= b - a ? 6 : 5);
  for (Digit i = 0; i < b; ++i) digit_fact(i, 4, i <= a - 1 ? 2 : 3);
  for (Digit i = 0; i < b; ++i) digit_fact(i, 5, i <= a - 2 ? 2 : 3);
  return rep;
}

SymmetryReport symmetry_and_junctions(const CurveSystem& sys) {
  const TileParams& p = sys.params;
  const Digit a = static_cast<Digit>(p.a), b = static_cast<Digit>(p.b), t = b - 1;
  SymmetryReport rep;
  rep.center = point_eval(Address::fractional({}, {a - 2}), p);
  const RationalPoint top = point_eval(Address::fractional({}, {t}), p);
  if (!(rep.center == Rational(1, 2) * top)) {
    throw TileError(ErrorKind::IdentityFailure, "0.(A-2) is not the midpoint of 0 and 0.(B-1)");
  }
  for (Digit i = 0; i < b; ++i) {
    rep.p.push_back(point_eval(Address::fractional({i}, {a - 2}), p));
    if (!(rep.p.back() == apply_contraction(i, rep.center, p))) {
      throw TileError(ErrorKind::IdentityFailure, "P_" + std::to_string(i) + " != f_i(S)");
    }
  }
  const AlphaCurve& c = sys.alpha[static_cast<std::size_t>(b - 2)];
  const AlphaCurve& f = sys.alpha_prime[static_cast<std::size_t>(b - 2)];
  if (!(point_eval(c.s_address, p) == rep.p.back())) {
    throw TileError(ErrorKind::IdentityFailure, "P_{B-1} is not C(s_{B-1})");
  }
  if (!(point_eval(f.s_address, p) == rep.p.front())) {
    throw TileError(ErrorKind::IdentityFailure, "P_0 is not the flipped endpoint");
  }
  if (!c.language.accepts(Address::fractional({t}, {a - 2})) ||
      !f.language.accepts(Address::fractional({0}, {b - a + 1}))) {
    throw TileError(ErrorKind::IdentityFailure, "P_{B-1} or P_0 missing from its curve");
  }
  return rep;
}

SubdivisionReplay replay_subdivision_rules(const TileParams& params) {
  require_chain_regime(params);
  const NeighborSet set = neighbor_set_formula(params);
  const Digit a = static_cast<Digit>(params.a), b = static_cast<Digit>(params.b), t = b - 1;
  SubdivisionReplay rep;
  auto check = [&](const DigitWord& u, const DigitWord& v, bool expected) {
    ++rep.cases;
    if (subdivision_intersects(u, v, params, set) != expected) {
      std::ostringstream msg;
      msg << "T_";
      for (Digit d : u) msg << d << ' ';
      msg << "vs T_";
      for (Digit d : v) msg << d << ' ';
      msg << (expected ? "should meet" : "should be disjoint");
      rep.failures.push_back(msg.str());
    }
  };
  for (Digit x = 0; x < b; ++x) {
    for (Digit y = 0; y < b; ++y) {
      if (x != y) check({x}, {y}, x - y == 1 || x - y == -1);
    }
  }
  for (Digit x = 1; x < b; ++x) {
    const Digit xp = x - 1;
    for (Digit x2 = 0; x2 < b; ++x2) {
      for (Digit y2 = 0; y2 < b; ++y2) {
        const Digit d2 = x2 - y2;
        check({x, x2}, {xp, y2}, d2 == a || d2 == a - 1 || d2 == a - 2);
        if (d2 == a - 2) {
          for (Digit x3 = 0; x3 < b; ++x3) {
            for (Digit y3 = 0; y3 < b; ++y3) {
              const bool meet = x3 - y3 == -1;
              check({x, x2, x3}, {xp, y2, y3}, meet);
              if (!meet) continue;
              ++rep.cases;
              const Address l = Address::fractional({x, x2, x3}, {0, t});
              const Address r = Address::fractional({xp, y2, y3}, {t, 0});
              if (!(point_eval(l, params) == point_eval(r, params))) {
                rep.failures.push_back("0." + l.str() + " != 0." + r.str());
              }
              const auto single = adjacent_singleton_point({x, x2, x3}, {xp, y2, y3}, params);
              if (!single || !(point_eval(single->first, params) == point_eval(l, params))) {
                rep.failures.push_back("T_" + l.str().substr(0, 3) + " meets its neighbour in more than the point 0." +
                                       l.str());
              }
            }
          }
        }
        if (d2 != a && d2 != a - 1) continue;
        for (Digit x3 = 0; x3 < b; ++x3) {
          for (Digit y3 = 0; y3 < b; ++y3) {
            for (Digit x4 = 0; x4 < b; ++x4) {
              for (Digit y4 = 0; y4 < b; ++y4) {
                const Digit d3 = x3 - y3, d4 = x4 - y4;
                bool meet;
                if (d2 == a) {
                  meet = x3 == t && y3 == 0 && (d4 == -a || d4 == -a + 1 || d4 == -a + 2);
                } else {
                  meet = (d3 == b - a && x4 == 0 && y4 == t) ||
                         (d3 == b - a + 1 && (d4 == a - b || d4 == a - b - 1 || d4 == a - b - 2)) ||
                         (d3 == b - a + 2 && d4 == 1);
                }
                check({x, x2, x3, x4}, {xp, y2, y3, y4}, meet);
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

DigitAutomaton alpha_description(const CurveSystem& sys, int index, bool flipped, int unroll,
                                 bool zero_repetition_tail) {
  const TileParams& p = sys.params;
  require_chain_regime(p);
  const Digit a = static_cast<Digit>(p.a), b = static_cast<Digit>(p.b), t = b - 1;
  const Digit c = a - 2, d = b - a + 1;
  const int alphabet = static_cast<int>(b);
  const ContactGraph& g = sys.ordered.graph;
  auto fd = [&](DigitWord w) {
    if (flipped) {
      for (auto& x : w) x = t - x;
    }
    return w;
  };
  std::vector<DigitAutomaton> terms;
  auto cyl = [&](const DigitWord& w, std::initializer_list<int> ks) {
    std::vector<int> states;
    for (int k : ks) states.push_back(flipped ? (k - 1 + 3) % kContactStates : k - 1);
    terms.push_back(boundary_language(g, states).prepend(fd(w)));
  };
  auto point = [&](const DigitWord& pre, const DigitWord& per) {
    terms.push_back(DigitAutomaton::singleton(Address::fractional(fd(pre), fd(per)), alphabet));
  };
  const DigitWord T{t}, Z{0};
  const DigitWord TZ{t, 0}, ZT{0, t}, DC{d, c}, CD{c, d};
  if (index >= 1 && index <= b - 2) {
    const Digit i = index;
    point({i, 0, t}, TZ);
    for (int q = 0; q <= unroll; ++q) {
      const DigitWord w = cat({{i, 0, t}, power(TZ, q)});
      cyl(cat({w, {b - a}}), {1});
      for (Digit k = b - a + 1; k <= b - 2; ++k) cyl(cat({w, {k}}), {1, 2});
      const DigitWord v = cat({{i, 0, t, t}, power(ZT, q)});
      for (Digit k = 1; k <= a - 2; ++k) cyl(cat({v, {k}}), {4, 5});
      cyl(cat({v, {a - 1}}), {4});
      cyl(cat({{i, c, b - 2}, power(ZT, q), Z}), {4});
      cyl(cat({{i, c, b - 2, 0}, power(TZ, q), T}), {1});
    }
    for (Digit k = 0; k <= a - 3; ++k) cyl({i, k}, {4, 5});
    cyl({i, c}, {4});
    cyl({i, c, b - 2}, {1});
    cyl({i, c, t}, {1, 2});
    point({i, c, b - 2}, ZT);
  } else if (index == b - 1) {
    point({t, c, b - 2}, ZT);
    for (int q = 0; q <= unroll; ++q) {
      const DigitWord w = cat({{t, c, b - 2}, power(ZT, q)});
      for (Digit k = 0; k <= a - 2; ++k) cyl(cat({w, {k}}), {4, 5});
      cyl(cat({w, {a - 1}}), {4});
      const DigitWord v = cat({{t, c, b - 2, 0}, power(TZ, q)});
      cyl(cat({v, {b - a}}), {1});
      for (Digit k = b - a + 1; k <= t; ++k) cyl(cat({v, {k}}), {1, 2});
    }
    cyl({t, c, d}, {1});
    for (Digit k = b - a + 2; k <= b - 3; ++k) cyl({t, c, k}, {1, 2});
    for (int q = 1; q <= unroll; ++q) {
      const DigitWord w = cat({{t, c}, power(DC, q)});
      cyl(cat({w, {c}}), {1});
      for (Digit k = a - 1; k <= t; ++k) cyl(cat({w, {k}}), {1, 2});
    }
    for (int q = zero_repetition_tail ? 0 : 1; q <= unroll; ++q) {
      const DigitWord v = cat({{t, c, d}, power(CD, q)});
      for (Digit k = 0; k <= a - 3; ++k) cyl(cat({v, {k}}), {4, 5});
      cyl(cat({v, {c}}), {4});
    }
    point({t}, CD);
  } else if (index == b) {
    point({t, t, 0}, ZT);
    for (int q = 0; q <= unroll; ++q) {
      const DigitWord w = cat({{t, t, 0}, power(ZT, q)});
      for (Digit k = 1; k <= a - 2; ++k) cyl(cat({w, {k}}), {4, 5});
      cyl(cat({w, {a - 1}}), {4});
      const DigitWord v = cat({{t, t, 0, 0}, power(TZ, q)});
      cyl(cat({v, {b - a}}), {1});
      for (Digit k = b - a + 1; k <= b - 2; ++k) cyl(cat({v, {k}}), {1, 2});
      const DigitWord x = cat({T, power(DC, q)});
      cyl(cat({x, {d}}), {1});
      for (Digit k = b - a + 2; k <= t; ++k) cyl(cat({x, {k}}), {1, 2});
      const DigitWord y = cat({{t, d}, power(CD, q)});
      for (Digit k = 0; k <= a - 3; ++k) cyl(cat({y, {k}}), {4, 5});
      cyl(cat({y, {c}}), {4});
    }
    point({t}, DC);
  } else {
    throw TileError(ErrorKind::OutOfRange, "alpha index out of range");
  }
  // Pairwise unions keep the intermediate automata small.
  while (terms.size() > 1) {
    std::vector<DigitAutomaton> next;
    for (std::size_t k = 0; k + 1 < terms.size(); k += 2) next.push_back(unite(terms[k], terms[k + 1]));
    if (terms.size() % 2 == 1) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms.empty() ? DigitAutomaton(alphabet) : terms.front();
}

bool replay_alpha_description(const CurveSystem& sys, int index, bool flipped, std::size_t depth,
                              bool zero_repetition_tail) {
  const auto& list = flipped ? sys.alpha_prime : sys.alpha;
  const DigitAutomaton& lang = list.at(static_cast<std::size_t>(index - 1)).language;
  const DigitAutomaton desc = alpha_description(sys, index, flipped, static_cast<int>(depth), zero_repetition_tail);
  return lang.prefixes(depth) == desc.prefixes(depth);
}

}  // namespace tiletopo
