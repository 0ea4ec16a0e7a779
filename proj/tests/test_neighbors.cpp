#include "tiletopo/errors.hpp"
#include "tiletopo/neighbors.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tiletopo;

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> as_set(const NeighborSet& s) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (Vec2i v : s.members) out.insert({v.x, v.y});
  return out;
}

}  // namespace

TEST(NeighborFormula, FourFiveMatchesListedSet) {
  auto s = neighbor_set_formula(TileParams::make(4, 5));
  EXPECT_EQ(s.j, 2);
  std::set<std::pair<std::int64_t, std::int64_t>> expected{
      {1, 0}, {-1, 0}, {3, 1}, {-3, -1}, {2, 1}, {-2, -1}, {4, 1}, {-4, -1}, {6, 2}, {-6, -2}};
  EXPECT_EQ(as_set(s), expected);
}

TEST(NeighborFormula, KnuthDragon) {
  auto s = neighbor_set_formula(TileParams::make(2, 2));
  EXPECT_EQ(s.j, 1);
  std::set<std::pair<std::int64_t, std::int64_t>> expected{
      {1, 0}, {-1, 0}, {1, 1}, {-1, -1}, {2, 1}, {-2, -1}};
  EXPECT_EQ(as_set(s), expected);
}

TEST(NeighborFormula, FiveFive) {
  auto s = neighbor_set_formula(TileParams::make(5, 5));
  EXPECT_EQ(s.j, 4);
  EXPECT_EQ(s.size(), 18u);
}

TEST(NeighborFormula, SortedByYThenX) {
  auto s = neighbor_set_formula(TileParams::make(7, 9));
  for (std::size_t i = 1; i < s.members.size(); ++i) {
    const Vec2i p = s.members[i - 1], q = s.members[i];
    EXPECT_TRUE(p.y < q.y || (p.y == q.y && p.x < q.x));
  }
}

TEST(NeighborSearch, AgreesWithFormulaOnGrid) {
  for (std::int64_t b = 2; b <= 12; ++b) {
    for (std::int64_t a = 1; a <= b; ++a) {
      auto p = TileParams::make(a, b);
      auto f = neighbor_set_formula(p);
      auto s = neighbor_set_search(p);
      EXPECT_EQ(f.members, s.members) << "A=" << a << " B=" << b;
      EXPECT_EQ(f.size(), static_cast<std::size_t>(2 + 4 * f.j));
      for (Vec2i v : s.members) EXPECT_TRUE(s.contains(-v));
      EXPECT_FALSE(s.contains({0, 0}));
    }
  }
}

TEST(NeighborSearch, ZeroTraceDiffersFromFormula) {
  // For A = 0 the tile is a rectangle with eight neighbors, while the formula
  // gives 2 + 4J = 6. The downstream pipeline never consumes A = 0.
  for (std::int64_t b = 2; b <= 6; ++b) {
    auto p = TileParams::make(0, b);
    EXPECT_EQ(neighbor_set_search(p).size(), 8u) << "B=" << b;
    EXPECT_EQ(neighbor_set_formula(p).size(), 6u);
  }
}

TEST(NeighborSearch, NonNeighborsOnlyReachNonNeighbors) {
  // One-step successors of a state outside S u {0} inside the search box
  // never re-enter S u {0}.
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{4, 5}, {5, 5}, {7, 12}}) {
    auto p = TileParams::make(a, b);
    auto s = neighbor_set_formula(p);
    for (std::int64_t y = -4; y <= 4; ++y) {
      for (std::int64_t x = -3 * b; x <= 3 * b; ++x) {
        Vec2i v{x, y};
        if (s.contains_or_zero(v)) continue;
        for (std::int64_t d = -(b - 1); d <= b - 1; ++d) {
          Vec2i next{-b * y + d, x - a * y};
          EXPECT_FALSE(s.contains_or_zero(next)) << v << " -> " << next;
        }
      }
    }
  }
}

TEST(Subdivision, DiffExamples) {
  auto p = TileParams::make(4, 5);
  BigVec2 zero = subdivision_diff({3, 1}, {3, 1}, p);
  EXPECT_EQ(zero, (BigVec2{0, 0}));
  EXPECT_EQ(subdivision_diff({2, 2}, {1, 0}, p), (BigVec2{2, 1}));
  EXPECT_EQ(subdivision_diff({2}, {1}, p), (BigVec2{1, 0}));
  EXPECT_THROW(subdivision_diff({2}, {1, 0}, p), TileError);
}

TEST(Subdivision, IntersectionExamples) {
  auto p = TileParams::make(4, 5);
  EXPECT_TRUE(subdivision_intersects({2}, {1}, p));
  EXPECT_FALSE(subdivision_intersects({3}, {1}, p));
  EXPECT_TRUE(subdivision_intersects({2, 2}, {1, 0}, p));
}

TEST(Subdivision, AdjacentSingletonPoint) {
  auto p = TileParams::make(4, 5);
  auto r = adjacent_singleton_point({1, 2, 0}, {0, 0, 1}, p);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->first.str(), "120(04)");
  EXPECT_EQ(r->second.str(), "001(40)");
  EXPECT_EQ(point_eval(r->first, p), point_eval(r->second, p));
  auto r2 = adjacent_singleton_point({2, 2, 0}, {1, 0, 1}, p);
  ASSERT_TRUE(r2.has_value());
  EXPECT_EQ(point_eval(r2->first, p), point_eval(r2->second, p));
  EXPECT_FALSE(adjacent_singleton_point({1, 2, 0}, {1, 2, 0}, p).has_value());
  EXPECT_THROW(adjacent_singleton_point({1, 2, 0}, {0, 0, 1}, TileParams::make(5, 5)), TileError);
}

TEST(Subdivision, CutPointRegimeDepthTwoCases) {
  // For 2A-B >= 5 the four constellations of the cut-point induction step
  // have no intersecting pair: differences (k-j, 2) and (k-j, 1) with the
  // stated ranges never land in S.
  for (std::int64_t b = 2; b <= 12; ++b) {
    for (std::int64_t a = 1; a <= b; ++a) {
      if (2 * a - b < 5) continue;
      auto p = TileParams::make(a, b);
      auto s = neighbor_set_formula(p);
      for (std::int64_t j = 0; j < b; ++j) {
        for (std::int64_t k = 0; k < b; ++k) {
          EXPECT_FALSE(s.contains({k - j, 2}));
          if (k <= b - a + 2) EXPECT_FALSE(s.contains({k - j, 1}));
          if (j >= b - a + 2) EXPECT_FALSE(s.contains({k - j, 1}));
        }
      }
      // Fourth case: first-digit differences (k-j, 0) with k-j <= 0 are neighbors
      // only for k-j = -1.
      for (std::int64_t d = -(b - 1); d <= 0; ++d) {
        EXPECT_EQ(s.contains({d, 0}), d == -1);
      }
    }
  }
}
