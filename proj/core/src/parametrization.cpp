#include "tiletopo/parametrization.hpp"

#include "tiletopo/errors.hpp"

#include <map>

namespace tiletopo {

Parametrization::Parametrization(OrderedContactGraph ordered, PerronData perron)
    : ordered_(std::move(ordered)), perron_(std::move(perron)) {
  const FieldPtr& f = perron_.field;
  beta_inv_ = perron_.beta.inverse();
  state_offset_[0] = QBeta::rational(f, Rational(0));
  for (std::size_t i = 0; i < kContactStates; ++i) state_offset_[i + 1] = state_offset_[i] + perron_.u[i];
  for (int i = 0; i < kContactStates; ++i) {
    auto& offs = letter_offset_[static_cast<std::size_t>(i)];
    offs.push_back(QBeta::rational(f, Rational(0)));
    for (std::size_t k = 1; k <= ordered_.out_degree(i); ++k) {
      const ContactEdge& e = ordered_.edge(i, static_cast<int>(k));
      offs.push_back(offs.back() + perron_.u[static_cast<std::size_t>(e.target)] * beta_inv_);
    }
    if (!(offs.back() == perron_.u[static_cast<std::size_t>(i)])) {
      throw TileError(ErrorKind::CertificateFailure, "sub-interval lengths do not fill the state interval");
    }
  }
  if (!(state_offset_[kContactStates] == QBeta::rational(f, Rational(1)))) {
    throw TileError(ErrorKind::CertificateFailure, "state intervals do not fill [0, 1]");
  }
}

const QBeta& Parametrization::letter_offset(int state, int letter) const {
  const auto& offs = letter_offset_.at(static_cast<std::size_t>(state));
  if (letter < 1 || static_cast<std::size_t>(letter) >= offs.size()) {
    throw TileError(ErrorKind::OutOfRange, "letter out of range");
  }
  return offs[static_cast<std::size_t>(letter - 1)];
}

Walk Parametrization::param_to_walk(const QBeta& t, std::size_t max_steps) const {
  const FieldPtr& f = perron_.field;
  if (t.field() != f) throw TileError(ErrorKind::OutOfRange, "parameter from another field");
  if (t.sign() < 0 || t > QBeta::rational(f, Rational(1))) {
    throw TileError(ErrorKind::OutOfRange, "parameter outside [0, 1]");
  }
  int state = 0;
  while (state < kContactStates - 1 && t > state_offset_[static_cast<std::size_t>(state + 1)]) ++state;
  QBeta x = t - state_offset_[static_cast<std::size_t>(state)];

  Walk walk;
  walk.start_state = state + 1;
  std::vector<int> letters;
  std::map<std::pair<int, std::vector<Rational>>, std::size_t> seen;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    auto key = std::make_pair(state, x.poly().coeffs());
    auto [it, inserted] = seen.emplace(std::move(key), letters.size());
    if (!inserted) {
      const auto p = static_cast<std::ptrdiff_t>(it->second);
      walk.prefix.assign(letters.begin(), letters.begin() + p);
      walk.period.assign(letters.begin() + p, letters.end());
      return walk;
    }
    const auto& offs = letter_offset_[static_cast<std::size_t>(state)];
    std::size_t k = 0;
    while (k + 2 < offs.size() && x > offs[k + 1]) ++k;
    letters.push_back(static_cast<int>(k + 1));
    x = (x - offs[k]) * perron_.beta;
    state = ordered_.edge(state, static_cast<int>(k + 1)).target;
  }
  throw TileError(ErrorKind::NonPeriodicWalk, "no period found within the step limit");
}

QBeta Parametrization::walk_to_param(const Walk& walk) const {
  const FieldPtr& f = perron_.field;
  int state = walk.start_state - 1;
  if (state < 0 || state >= kContactStates) throw TileError(ErrorKind::OutOfRange, "start state out of range");
  QBeta scale = QBeta::rational(f, Rational(1));
  QBeta sum = state_offset_[static_cast<std::size_t>(state)];
  auto step = [&](int letter, QBeta& acc, QBeta& sc) {
    acc = acc + sc * letter_offset(state, letter);
    state = ordered_.edge(state, letter).target;
    sc = sc * beta_inv_;
  };
  for (int letter : walk.prefix) step(letter, sum, scale);
  if (!walk.infinite()) return sum;

  std::map<int, std::pair<QBeta, QBeta>> seen;  // state -> (sum, scale) at a period boundary
  while (!seen.count(state)) {
    seen.emplace(state, std::make_pair(sum, scale));
    for (int letter : walk.period) step(letter, sum, scale);
  }
  // From the recorded boundary the tail repeats: T = S0 + s0 * X with
  // X = (S1 - S0)/s0 + (s1/s0) X.
  const auto& [sum0, scale0] = seen.at(state);
  const QBeta ratio = scale / scale0;
  const QBeta one = QBeta::rational(f, Rational(1));
  const QBeta x = ((sum - sum0) / scale0) / (one - ratio);
  return sum0 + scale0 * x;
}

RationalPoint Parametrization::boundary_point(const QBeta& t) const {
  return point_eval(psi(param_to_walk(t), ordered_), params());
}

BigInt count_walks(const ContactGraph& graph, int n) {
  std::array<BigInt, kContactStates> v;
  for (auto& x : v) x = 1;
  for (int step = 0; step < n; ++step) {
    std::array<BigInt, kContactStates> next;
    for (auto& x : next) x = 0;
    for (const auto& e : graph.edges) next[static_cast<std::size_t>(e.source)] += v[static_cast<std::size_t>(e.target)];
    v = std::move(next);
  }
  BigInt total = 0;
  for (const auto& x : v) total += x;
  return total;
}

std::vector<Walk> walks_of_length(const OrderedContactGraph& og, int n) {
  std::vector<Walk> out;
  std::vector<int> letters;
  auto rec = [&](auto&& self, int start, int state, int depth) -> void {
    if (depth == n) {
      out.push_back(Walk{start + 1, letters, {}});
      return;
    }
    for (std::size_t k = 1; k <= og.out_degree(state); ++k) {
      letters.push_back(static_cast<int>(k));
      self(self, start, og.edge(state, static_cast<int>(k)).target, depth + 1);
      letters.pop_back();
    }
  };
  for (int s = 0; s < kContactStates; ++s) rec(rec, s, s, 0);
  return out;
}

BoundaryApproximation approx_boundary(int n, const OrderedContactGraph& og, std::size_t budget) {
  if (n < 0) throw TileError(ErrorKind::OutOfRange, "n must be non-negative");
  if (count_walks(og.graph, n) > budget) {
    throw TileError(ErrorKind::BudgetExceeded, "number of walks exceeds the budget");
  }
  const TileParams& p = og.graph.params;
  const RationalMatrix2 minv = p.inverse_matrix();
  // col[k] = M^-k e1, the weight of the k-th digit.
  std::vector<RationalPoint> col(static_cast<std::size_t>(n) + 1);
  RationalMatrix2 pw = RationalMatrix2::identity();
  for (int k = 1; k <= n; ++k) {
    pw = pw * minv;
    col[static_cast<std::size_t>(k)] = {pw.a, pw.c};
  }
  const RationalMatrix2 minv_n = pw;

  BoundaryApproximation result;
  auto rec = [&](auto&& self, int state, int depth, const RationalPoint& offset) -> void {
    if (depth == n) {
      ++result.walk_count;
      RationalPoint v = offset + apply(minv_n, og.first[static_cast<std::size_t>(state)]);
      if (result.vertices.empty() || !(result.vertices.back() == v)) result.vertices.push_back(std::move(v));
      return;
    }
    for (std::size_t k = 1; k <= og.out_degree(state); ++k) {
      const ContactEdge& e = og.edge(state, static_cast<int>(k));
      const RationalPoint next = offset + Rational(e.a) * col[static_cast<std::size_t>(depth + 1)];
      self(self, e.target, depth + 1, next);
    }
  };
  for (int s = 0; s < kContactStates; ++s) rec(rec, s, 0, RationalPoint{});
  while (result.vertices.size() > 1 && result.vertices.back() == result.vertices.front()) result.vertices.pop_back();
  return result;
}

}  // namespace tiletopo
