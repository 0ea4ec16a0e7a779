#pragma once

// Deterministic automata over the digit alphabet {0, ..., B-1} recognizing
// closed sets of infinite digit words: a word is accepted when it has an
// infinite run. Every state is accepting.

#include "tiletopo/contact_graph.hpp"

#include <functional>
#include <vector>

namespace tiletopo {

class DigitAutomaton {
 public:
  explicit DigitAutomaton(int alphabet = 2);

  int alphabet() const { return alphabet_; }
  std::size_t size() const { return trans_.size(); }
  /// -1 when the language is empty.
  int initial() const { return initial_; }
  bool is_empty() const { return initial_ < 0; }
  /// Target of state q on digit d, or -1.
  int next(int q, Digit d) const;

  int add_state();
  void set_initial(int q) { initial_ = q; }
  void set_transition(int q, Digit d, int target);

  /// Only reachable states with an infinite continuation, numbered in
  /// breadth-first order by digit.
  DigitAutomaton trimmed() const;

  /// Runs the fractional digits of `addr`; the integer part must be empty.
  bool accepts(const Address& addr) const;
  /// Length-n prefixes of accepted words, sorted.
  std::vector<DigitWord> prefixes(std::size_t n) const;
  bool is_universal() const;

  DigitAutomaton map_digits(const std::function<Digit(Digit)>& f) const;
  /// { w : d w accepted }
  DigitAutomaton after(Digit d) const;
  /// { d w : w accepted }
  DigitAutomaton prepend(Digit d) const;
  /// { p w : w accepted } for a finite prefix p.
  DigitAutomaton prepend(const DigitWord& prefix) const;

  static DigitAutomaton full(int alphabet);
  static DigitAutomaton singleton(const Address& addr, int alphabet);
  /// All words starting with `prefix`.
  static DigitAutomaton cylinder(const DigitWord& prefix, int alphabet);

 private:
  int alphabet_;
  int initial_ = -1;
  std::vector<std::vector<int>> trans_;
};

DigitAutomaton unite(const DigitAutomaton& x, const DigitAutomaton& y);
DigitAutomaton intersect(const DigitAutomaton& x, const DigitAutomaton& y);
/// L(small) is contained in L(big).
bool includes(const DigitAutomaton& big, const DigitAutomaton& small);
bool equivalent(const DigitAutomaton& x, const DigitAutomaton& y);

/// Nondeterministic builder; determinize() trims and applies the subset
/// construction, which preserves the language of closed sets.
class DigitNfa {
 public:
  explicit DigitNfa(int alphabet) : alphabet_(alphabet) {}
  int add_state();
  void add_initial(int q) { initial_.push_back(q); }
  void add_transition(int q, Digit d, int target);
  std::size_t size() const { return trans_.size(); }
  DigitAutomaton determinize() const;

 private:
  int alphabet_;
  std::vector<int> initial_;
  std::vector<std::vector<std::pair<Digit, int>>> trans_;
};

/// Digit words psi(w) of all infinite walks w from the given 0-based states.
DigitAutomaton boundary_language(const ContactGraph& graph, const std::vector<int>& states);

/// -1, 0, 1 comparing infinite walks in lexicographic order (start state
/// first, then letters).
int compare_walks(const Walk& x, const Walk& y);

/// Digit words psi(w) of all infinite walks w with lo <= w <= hi.
DigitAutomaton walk_interval_language(const OrderedContactGraph& ordered, const Walk& lo, const Walk& hi);

}  // namespace tiletopo
