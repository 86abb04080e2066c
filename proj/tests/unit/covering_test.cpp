#include <gtest/gtest.h>

#include "rainbow/bounds.hpp"
#include "rainbow/covering.hpp"

using namespace rainbow;

TEST(Combinations, LexicographicAndEarlyStop) {
  std::vector<std::vector<int>> seen;
  forEachCombination(4, 2, [&](const std::vector<int>& idx) {
    seen.push_back(idx);
    return false;
  });
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen.front(), (std::vector<int>{0, 1}));
  EXPECT_EQ(seen.back(), (std::vector<int>{2, 3}));
  int calls = 0;
  EXPECT_TRUE(forEachCombination(5, 3, [&](const std::vector<int>&) { return ++calls == 2; }));
  EXPECT_EQ(calls, 2);
  EXPECT_FALSE(forEachCombination(3, 4, [](const std::vector<int>&) { return true; }));
}

TEST(CoveringSets, TwoEdgeStarFixtureIsTight) {
  // N = {a, b, c, d} = {0, 1, 2, 3}; class {ab, ac}.
  const std::vector<std::pair<Vertex, Vertex>> cls{{0, 1}, {0, 2}};
  EXPECT_EQ(countCoveringSets(cls, {0, 1, 2, 3}, 2), 4);
  EXPECT_EQ(coverBound(4, 2), 4);
}

TEST(CoveringSets, TriangleAndOutsideClasses) {
  EXPECT_LE(countCoveringSets({{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2, 3}, 2), 4);
  EXPECT_EQ(countCoveringSets({{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2, 3}, 2), 3);
  EXPECT_EQ(countCoveringSets({{4, 5}}, {0, 1, 2, 3}, 2), 0);
  std::vector<Vertex> big(21);
  EXPECT_THROW(countCoveringSets({{0, 1}}, big, 2), std::invalid_argument);
}

TEST(UncoveringSet, FixtureLeavesTwoUncoveringSubsets) {
  const auto g = EdgeColoredGraph::fromClasses(4, {{"A", {{0, 1}, {0, 2}}}});
  UncoveringOptions enumerateOnly{1, 0, 1000};
  auto s = findUncoveringSet(g, {0, 1, 2, 3}, 2, enumerateOnly);
  ASSERT_TRUE(s);
  // The first uncovering pair in lexicographic order is {b, d}.
  EXPECT_EQ(*s, (std::vector<Vertex>{1, 3}));
}

TEST(UncoveringSet, DisjointNonStarsAlwaysWork) {
  const auto g = EdgeColoredGraph::fromClasses(6, {{"A", {{0, 1}, {1, 2}}}});
  auto s = findUncoveringSet(g, {3, 4, 5}, 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->size(), 2u);
}

TEST(UncoveringSet, AbsentWhenNCoversEverything) {
  const auto g = EdgeColoredGraph::fromClasses(3, {{"A", {{0, 1}}}, {"B", {{1, 2}}}, {"C", {{0, 1}}}});
  EXPECT_FALSE(findUncoveringSet(g, {0, 1, 2}, 3));
}

TEST(UncoveringSet, EnumerationCapIsRespected) {
  const auto g = EdgeColoredGraph::fromClasses(4, {{"A", {{0, 1}, {0, 2}}}});
  EXPECT_FALSE(findUncoveringSet(g, {0, 1, 2, 3}, 2, {1, 0, 5}));
}

TEST(CoveringSets, ExhaustiveSmallShapesRespectBound) {
  // Classes of 2-3 edges over N = {0..5} plus one outside vertex 6. A star
  // class is centred at a star vertex, which never lies in N.
  const std::vector<Vertex> nonStars{0, 1, 2, 3, 4, 5};
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < 7; ++a)
    for (Vertex b = a + 1; b < 7; ++b) pairs.emplace_back(a, b);
  int shapes = 0;
  for (int size = 2; size <= 3; ++size) {
    forEachCombination(static_cast<int>(pairs.size()), size, [&](const std::vector<int>& idx) {
      std::vector<std::pair<Vertex, Vertex>> cls;
      std::vector<int> degree(7, 0);
      for (int i : idx) {
        cls.push_back(pairs[i]);
        ++degree[pairs[i].first];
        ++degree[pairs[i].second];
      }
      for (Vertex c = 0; c < 6; ++c)
        if (degree[c] == size) return false;
      ++shapes;
      for (int k = 2; k <= 6; ++k) EXPECT_LE(BigInt(countCoveringSets(cls, nonStars, k)), coverBound(6, k));
      return false;
    });
  }
  EXPECT_GT(shapes, 1000);
}

TEST(CoveringSets, StarCentredInsideNCanExceedBound) {
  // Why the centre must lie outside N: with |N| = 5 the star {ab, ac} centred
  // at a in N is covered by 5 pairs, above 4 C(5, 0) = 4.
  EXPECT_EQ(countCoveringSets({{0, 1}, {0, 2}}, {0, 1, 2, 3, 4}, 2), 5);
}
