#include "tiletopo/automaton.hpp"

#include "tiletopo/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tiletopo {

DigitAutomaton::DigitAutomaton(int alphabet) : alphabet_(alphabet) {
  if (alphabet < 1) throw TileError(ErrorKind::OutOfRange, "alphabet must be non-empty");
}

int DigitAutomaton::next(int q, Digit d) const {
  if (q < 0 || d < 0 || d >= alphabet_) return -1;
  return trans_[static_cast<std::size_t>(q)][static_cast<std::size_t>(d)];
}

int DigitAutomaton::add_state() {
  trans_.emplace_back(static_cast<std::size_t>(alphabet_), -1);
  return static_cast<int>(trans_.size()) - 1;
}

void DigitAutomaton::set_transition(int q, Digit d, int target) {
  if (d < 0 || d >= alphabet_) throw TileError(ErrorKind::OutOfRange, "digit outside the alphabet");
  trans_.at(static_cast<std::size_t>(q))[static_cast<std::size_t>(d)] = target;
}

DigitAutomaton DigitAutomaton::trimmed() const {
  const std::size_t n = trans_.size();
  std::vector<bool> live(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (!live[q]) continue;
      bool any = false;
      for (int t : trans_[q]) any = any || (t >= 0 && live[static_cast<std::size_t>(t)]);
      if (!any) {
        live[q] = false;
        changed = true;
      }
    }
  }
  DigitAutomaton out(alphabet_);
  if (initial_ < 0 || !live[static_cast<std::size_t>(initial_)]) return out;
  std::vector<int> id(n, -1);
  std::deque<int> queue{initial_};
  id[static_cast<std::size_t>(initial_)] = out.add_state();
  out.initial_ = 0;
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (Digit d = 0; d < alphabet_; ++d) {
      const int t = trans_[static_cast<std::size_t>(q)][static_cast<std::size_t>(d)];
      if (t < 0 || !live[static_cast<std::size_t>(t)]) continue;
      if (id[static_cast<std::size_t>(t)] < 0) {
        id[static_cast<std::size_t>(t)] = out.add_state();
        queue.push_back(t);
      }
      out.set_transition(id[static_cast<std::size_t>(q)], d, id[static_cast<std::size_t>(t)]);
    }
  }
  return out;
}

bool DigitAutomaton::accepts(const Address& addr) const {
  if (!addr.integer_part().empty()) return false;
  int q = initial_;
  for (Digit d : addr.preperiod()) {
    q = next(q, d);
    if (q < 0) return false;
  }
  std::set<int> seen;
  while (seen.insert(q).second) {
    for (Digit d : addr.period()) {
      q = next(q, d);
      if (q < 0) return false;
    }
  }
  return true;
}

std::vector<DigitWord> DigitAutomaton::prefixes(std::size_t n) const {
  const DigitAutomaton t = trimmed();
  std::vector<DigitWord> out;
  if (t.is_empty()) return out;
  DigitWord word;
  auto rec = [&](auto&& self, int q) -> void {
    if (word.size() == n) {
      out.push_back(word);
      return;
    }
    for (Digit d = 0; d < alphabet_; ++d) {
      const int r = t.next(q, d);
      if (r < 0) continue;
      word.push_back(d);
      self(self, r);
      word.pop_back();
    }
  };
  rec(rec, t.initial());
  return out;
}

bool DigitAutomaton::is_universal() const {
  const DigitAutomaton t = trimmed();
  if (t.is_empty()) return false;
  for (const auto& row : t.trans_) {
    for (int target : row) {
      if (target < 0) return false;
    }
  }
  return true;
}

DigitAutomaton DigitAutomaton::map_digits(const std::function<Digit(Digit)>& f) const {
  DigitNfa nfa(alphabet_);
  for (std::size_t q = 0; q < trans_.size(); ++q) nfa.add_state();
  if (initial_ >= 0) nfa.add_initial(initial_);
  for (std::size_t q = 0; q < trans_.size(); ++q) {
    for (Digit d = 0; d < alphabet_; ++d) {
      const int t = trans_[q][static_cast<std::size_t>(d)];
      if (t >= 0) nfa.add_transition(static_cast<int>(q), f(d), t);
    }
  }
  return nfa.determinize();
}

DigitAutomaton DigitAutomaton::after(Digit d) const {
  DigitAutomaton out = *this;
  out.initial_ = next(initial_, d);
  return out.trimmed();
}

DigitAutomaton DigitAutomaton::prepend(Digit d) const { return prepend(DigitWord{d}); }

DigitAutomaton DigitAutomaton::prepend(const DigitWord& prefix) const {
  DigitAutomaton out = trimmed();
  if (out.is_empty()) return out;
  int target = out.initial_;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    const int q = out.add_state();
    out.set_transition(q, *it, target);
    target = q;
  }
  out.initial_ = target;
  return out.trimmed();
}

DigitAutomaton DigitAutomaton::full(int alphabet) {
  DigitAutomaton out(alphabet);
  const int q = out.add_state();
  for (Digit d = 0; d < alphabet; ++d) out.set_transition(q, d, q);
  out.set_initial(q);
  return out;
}

DigitAutomaton DigitAutomaton::singleton(const Address& addr, int alphabet) {
  if (!addr.integer_part().empty()) throw TileError(ErrorKind::OutOfRange, "fractional address expected");
  DigitAutomaton out(alphabet);
  DigitWord digits = addr.preperiod();
  digits.insert(digits.end(), addr.period().begin(), addr.period().end());
  std::vector<int> q;
  for (std::size_t i = 0; i < digits.size(); ++i) q.push_back(out.add_state());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::size_t nxt = i + 1 < digits.size() ? i + 1 : addr.preperiod().size();
    out.set_transition(q[i], digits[i], q[nxt]);
  }
  out.set_initial(q.front());
  return out.trimmed();
}

DigitAutomaton DigitAutomaton::cylinder(const DigitWord& prefix, int alphabet) {
  return full(alphabet).prepend(prefix);
}

namespace {

template <typename Combine>
DigitAutomaton product(const DigitAutomaton& x, const DigitAutomaton& y, Combine&& keep) {
  if (x.alphabet() != y.alphabet()) throw TileError(ErrorKind::LengthMismatch, "alphabets differ");
  DigitAutomaton out(x.alphabet());
  if (x.is_empty() && y.is_empty()) return out;
  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> queue;
  auto get = [&](std::pair<int, int> key) {
    auto it = id.find(key);
    if (it != id.end()) return it->second;
    const int q = out.add_state();
    id.emplace(key, q);
    queue.push_back(key);
    return q;
  };
  out.set_initial(get({x.initial(), y.initial()}));
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    const int from = id.at({a, b});
    for (Digit d = 0; d < x.alphabet(); ++d) {
      const int na = x.next(a, d), nb = y.next(b, d);
      if (!keep(na >= 0, nb >= 0)) continue;
      out.set_transition(from, d, get({na, nb}));
    }
  }
  return out.trimmed();
}

}  // namespace

DigitAutomaton unite(const DigitAutomaton& x, const DigitAutomaton& y) {
  return product(x.trimmed(), y.trimmed(), [](bool a, bool b) { return a || b; });
}

DigitAutomaton intersect(const DigitAutomaton& x, const DigitAutomaton& y) {
  return product(x, y, [](bool a, bool b) { return a && b; });
}

bool includes(const DigitAutomaton& big, const DigitAutomaton& small) {
  const DigitAutomaton s = small.trimmed(), b = big.trimmed();
  if (s.is_empty()) return true;
  if (b.is_empty()) return false;
  std::set<std::pair<int, int>> seen{{s.initial(), b.initial()}};
  std::vector<std::pair<int, int>> stack{{s.initial(), b.initial()}};
  while (!stack.empty()) {
    const auto [qs, qb] = stack.back();
    stack.pop_back();
    for (Digit d = 0; d < s.alphabet(); ++d) {
      const int ns = s.next(qs, d);
      if (ns < 0) continue;
      const int nb = b.next(qb, d);
      if (nb < 0) return false;
      if (seen.insert({ns, nb}).second) stack.push_back({ns, nb});
    }
  }
  return true;
}

bool equivalent(const DigitAutomaton& x, const DigitAutomaton& y) { return includes(x, y) && includes(y, x); }

int DigitNfa::add_state() {
  trans_.emplace_back();
  return static_cast<int>(trans_.size()) - 1;
}

void DigitNfa::add_transition(int q, Digit d, int target) {
  if (d < 0 || d >= alphabet_) throw TileError(ErrorKind::OutOfRange, "digit outside the alphabet");
  trans_.at(static_cast<std::size_t>(q)).push_back({d, target});
}

DigitAutomaton DigitNfa::determinize() const {
  const std::size_t n = trans_.size();
  std::vector<bool> live(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (!live[q]) continue;
      bool any = false;
      for (const auto& [d, t] : trans_[q]) any = any || live[static_cast<std::size_t>(t)];
      if (!any) {
        live[q] = false;
        changed = true;
      }
    }
  }
  DigitAutomaton out(alphabet_);
  std::vector<int> init;
  for (int q : initial_) {
    if (live[static_cast<std::size_t>(q)]) init.push_back(q);
  }
  std::sort(init.begin(), init.end());
  init.erase(std::unique(init.begin(), init.end()), init.end());
  if (init.empty()) return out;
  std::map<std::vector<int>, int> id;
  std::deque<std::vector<int>> queue;
  auto get = [&](const std::vector<int>& set) {
    auto it = id.find(set);
    if (it != id.end()) return it->second;
    const int q = out.add_state();
    id.emplace(set, q);
    queue.push_back(set);
    return q;
  };
  out.set_initial(get(init));
  while (!queue.empty()) {
    const std::vector<int> set = queue.front();
    queue.pop_front();
    const int from = id.at(set);
    std::vector<std::vector<int>> by_digit(static_cast<std::size_t>(alphabet_));
    for (int q : set) {
      for (const auto& [d, t] : trans_[static_cast<std::size_t>(q)]) {
        if (live[static_cast<std::size_t>(t)]) by_digit[static_cast<std::size_t>(d)].push_back(t);
      }
    }
    for (Digit d = 0; d < alphabet_; ++d) {
      auto& targets = by_digit[static_cast<std::size_t>(d)];
      if (targets.empty()) continue;
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      out.set_transition(from, d, get(targets));
    }
  }
  return out;
}

DigitAutomaton boundary_language(const ContactGraph& graph, const std::vector<int>& states) {
  DigitNfa nfa(static_cast<int>(graph.params.b));
  for (int i = 0; i < kContactStates; ++i) nfa.add_state();
  for (int s : states) nfa.add_initial(s);
  for (const auto& e : graph.edges) nfa.add_transition(e.source, e.a, e.target);
  return nfa.determinize();
}

namespace {

int letter_at(const Walk& w, std::size_t pos) {
  if (pos < w.prefix.size()) return w.prefix[pos];
  return w.period[(pos - w.prefix.size()) % w.period.size()];
}

}  // namespace

int compare_walks(const Walk& x, const Walk& y) {
  if (!x.infinite() || !y.infinite()) throw TileError(ErrorKind::OutOfRange, "infinite walks expected");
  if (x.start_state != y.start_state) return x.start_state < y.start_state ? -1 : 1;
  const std::size_t horizon = std::max(x.prefix.size(), y.prefix.size()) + x.period.size() * y.period.size();
  for (std::size_t i = 0; i < horizon; ++i) {
    const int a = letter_at(x, i), b = letter_at(y, i);
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

DigitAutomaton walk_interval_language(const OrderedContactGraph& og, const Walk& lo, const Walk& hi) {
  if (compare_walks(lo, hi) > 0) throw TileError(ErrorKind::OutOfRange, "empty walk interval");
  DigitNfa nfa(static_cast<int>(og.graph.params.b));
  // State: (contact state, position in lo or -1 when free, position in hi or -1).
  using Key = std::tuple<int, int, int>;
  std::map<Key, int> id;
  std::deque<Key> queue;
  auto get = [&](const Key& k) {
    auto it = id.find(k);
    if (it != id.end()) return it->second;
    const int q = nfa.add_state();
    id.emplace(k, q);
    queue.push_back(k);
    return q;
  };
  auto advance = [](const Walk& w, int pos) {
    int p = pos + 1;
    if (static_cast<std::size_t>(p) >= w.prefix.size() + w.period.size()) p = static_cast<int>(w.prefix.size());
    return p;
  };
  for (int g = lo.start_state - 1; g <= hi.start_state - 1; ++g) {
    nfa.add_initial(get({g, g == lo.start_state - 1 ? 0 : -1, g == hi.start_state - 1 ? 0 : -1}));
  }
  while (!queue.empty()) {
    const auto [g, lp, hp] = queue.front();
    queue.pop_front();
    const int from = id.at({g, lp, hp});
    for (std::size_t o = 1; o <= og.out_degree(g); ++o) {
      const int letter = static_cast<int>(o);
      int nl = -1, nh = -1;
      if (lp >= 0) {
        const int l = letter_at(lo, static_cast<std::size_t>(lp));
        if (letter < l) continue;
        if (letter == l) nl = advance(lo, lp);
      }
      if (hp >= 0) {
        const int h = letter_at(hi, static_cast<std::size_t>(hp));
        if (letter > h) continue;
        if (letter == h) nh = advance(hi, hp);
      }
      const ContactEdge& e = og.edge(g, letter);
      nfa.add_transition(from, e.a, get({e.target, nl, nh}));
    }
  }
  return nfa.determinize();
}

}  // namespace tiletopo
