#include "tiletopo/automaton.hpp"
#include "tiletopo/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tiletopo;

namespace {

Address A(const char* text) { return Address::parse(text); }

}  // namespace

TEST(Automaton, SingletonAndFull) {
  const auto s = DigitAutomaton::singleton(A("0.12(30)"), 4);
  EXPECT_TRUE(s.accepts(A("0.12(30)")));
  EXPECT_TRUE(s.accepts(A("0.123(03)")));
  EXPECT_FALSE(s.accepts(A("0.12(3)")));
  EXPECT_EQ(s.prefixes(5), (std::vector<DigitWord>{{1, 2, 3, 0, 3}}));
  EXPECT_TRUE(DigitAutomaton::full(4).is_universal());
  EXPECT_FALSE(s.is_universal());
}

TEST(Automaton, CylinderPrefixes) {
  const auto c = DigitAutomaton::cylinder({2, 1}, 3);
  EXPECT_EQ(c.prefixes(3), (std::vector<DigitWord>{{2, 1, 0}, {2, 1, 1}, {2, 1, 2}}));
  EXPECT_TRUE(c.accepts(A("0.21(02)")));
  EXPECT_FALSE(c.accepts(A("0.2(0)")));
}

TEST(Automaton, BooleanLaws) {
  const auto x = unite(DigitAutomaton::cylinder({0}, 3), DigitAutomaton::cylinder({1, 1}, 3));
  const auto y = unite(DigitAutomaton::cylinder({1}, 3), DigitAutomaton::singleton(A("0.(2)"), 3));
  EXPECT_TRUE(includes(unite(x, y), x));
  EXPECT_TRUE(includes(x, intersect(x, y)));
  EXPECT_TRUE(equivalent(intersect(x, y), DigitAutomaton::cylinder({1, 1}, 3)));
  EXPECT_TRUE(equivalent(unite(x, y), unite(y, x)));
  EXPECT_FALSE(includes(x, y));
  EXPECT_TRUE(intersect(DigitAutomaton::cylinder({0}, 3), DigitAutomaton::cylinder({1}, 3)).is_empty());
}

TEST(Automaton, ShiftAndPrependAreInverse) {
  const auto x = unite(DigitAutomaton::cylinder({0, 2}, 3), DigitAutomaton::singleton(A("0.1(01)"), 3));
  EXPECT_TRUE(equivalent(x.after(0).prepend(0), DigitAutomaton::cylinder({0, 2}, 3)));
  EXPECT_TRUE(equivalent(x.prepend(DigitWord{2, 2}).after(2).after(2), x));
  EXPECT_TRUE(x.after(2).is_empty());
}

TEST(Automaton, DigitFlipIsAnInvolution) {
  const auto x = unite(DigitAutomaton::cylinder({0, 2}, 4), DigitAutomaton::singleton(A("0.1(013)"), 4));
  const auto f = x.map_digits([](Digit d) { return 3 - d; });
  EXPECT_TRUE(f.accepts(A("0.2(320)")));
  EXPECT_TRUE(equivalent(f.map_digits([](Digit d) { return 3 - d; }), x));
}

TEST(Automaton, NfaDeterminization) {
  // Words over {0,1} that never contain 11.
  DigitNfa nfa(2);
  const int q0 = nfa.add_state(), q1 = nfa.add_state();
  nfa.add_initial(q0);
  nfa.add_transition(q0, 0, q0);
  nfa.add_transition(q0, 1, q1);
  nfa.add_transition(q1, 0, q0);
  const auto d = nfa.determinize();
  EXPECT_TRUE(d.accepts(A("0.(01)")));
  EXPECT_FALSE(d.accepts(A("0.011(0)")));
  EXPECT_EQ(d.prefixes(4).size(), 8u);  // Fibonacci
}

TEST(WalkOrder, CompareIgnoresPresentation) {
  EXPECT_EQ(compare_walks(Walk::parse("5;2,(6)"), Walk::parse("5;2,6,(6,6)")), 0);
  EXPECT_EQ(compare_walks(Walk::parse("3;(1,2)"), Walk::parse("3;1,(2,1)")), 0);
  EXPECT_LT(compare_walks(Walk::parse("3;(1,2)"), Walk::parse("3;(2)")), 0);
  EXPECT_LT(compare_walks(Walk::parse("2;(7)"), Walk::parse("3;(1)")), 0);
  EXPECT_GT(compare_walks(Walk::parse("4;1,(1)"), Walk::parse("3;(7)")), 0);
}

TEST(WalkInterval, ContainsPsiOfWalksInRange) {
  const auto og = derive_order_extension(build_contact_graph(TileParams::make(4, 5)));
  const auto lo = Walk::parse("3;2,1,3,(2)"), hi = Walk::parse("5;2,(6)");
  const auto lang = walk_interval_language(og, lo, hi);
  EXPECT_TRUE(lang.accepts(psi(lo, og)));
  EXPECT_TRUE(lang.accepts(psi(hi, og)));
  EXPECT_TRUE(lang.accepts(psi(Walk::parse("4;(1)"), og)));
  const auto single = walk_interval_language(og, hi, hi);
  EXPECT_TRUE(equivalent(single, DigitAutomaton::singleton(psi(hi, og), 5)));
}

TEST(BoundaryLanguage, AcceptsEveryWalkImage) {
  const auto og = derive_order_extension(build_contact_graph(TileParams::make(5, 7)));
  const auto lang = boundary_language(og.graph, {0, 1, 2, 3, 4, 5});
  std::mt19937 rng(11);
  int accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Walk w{std::uniform_int_distribution<int>(1, 6)(rng), {}, {}};
    for (int k = 0; k < 3; ++k) w.prefix.push_back(std::uniform_int_distribution<int>(1, 9)(rng));
    w.period.push_back(std::uniform_int_distribution<int>(1, 9)(rng));
    Address addr;
    try {
      addr = psi(w, og);
    } catch (const TileError&) {
      continue;
    }
    ++accepted;
    EXPECT_TRUE(lang.accepts(addr)) << w.str();
  }
  EXPECT_GT(accepted, 10);
  EXPECT_FALSE(lang.is_universal());
}
