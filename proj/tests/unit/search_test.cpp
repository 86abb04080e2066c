#include <gtest/gtest.h>

#include "../support/naive.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

namespace {

SearchOptions noUncovering() {
  SearchOptions o;
  o.uncoveringSamples = 0;
  o.uncoveringEnumerationCap = 0;
  return o;
}

void expectSound(const EdgeColoredGraph& g, const SearchOutcome& out, const std::string& label) {
  ASSERT_TRUE(out.found()) << label;
  EXPECT_FALSE(cycleProblem(g, *out.cycle)) << label;
  const auto best = naive::shortestRainbowCycle(g);
  ASSERT_TRUE(best) << label;
  EXPECT_GE(out.cycle->length(), *best) << label;
  if (out.bound) {
    EXPECT_TRUE(out.bound->satisfied) << label << " " << out.bound->name;
  }
}

}  // namespace

TEST(BranchNames, AreStable) {
  EXPECT_EQ(branchName(Branch::BaseCase), "base-case");
  EXPECT_EQ(branchName(Branch::FewDigraph), "few-nonstar-digraph");
  EXPECT_TRUE(isManyBranch(Branch::ManyRecursion));
  EXPECT_TRUE(isFewBranch(Branch::FewShortCircuit));
  EXPECT_FALSE(isFewBranch(Branch::BaseCase));
}

TEST(Search, PaperPresetUsesBaseCase) {
  const auto g = randomEC(8, 2, 3);
  const auto out = constructRainbowCycle(g, Constants::paper(2));
  expectSound(g, out, "paper");
  EXPECT_EQ(out.branch, Branch::BaseCase);
  ASSERT_TRUE(out.guarantee);
  EXPECT_TRUE(out.guarantee->satisfied);
  EXPECT_LE(out.cycle->length(), 8);
}

TEST(Search, RejectsInvalidInput) {
  const auto tooFewColors = EdgeColoredGraph::fromClasses(4, {{"a", {{0, 1}, {2, 3}}}});
  EXPECT_THROW(constructRainbowCycle(tooFewColors, Constants::paper(2)), std::invalid_argument);
  const auto tooBig = randomEC(6, 3, 1, ClassSizePolicy::Exact);
  EXPECT_THROW(constructRainbowCycle(tooBig, Constants::paper(2)), std::invalid_argument);
}

TEST(Search, StepPreconditions) {
  const auto g = circulant(8, 2);  // no non-star vertices
  EXPECT_THROW(manyNonStarStep(g, Constants::toy(2, 2, 4)), std::invalid_argument);
  EXPECT_NO_THROW(fewNonStarStep(g, Constants::toy(2, 2, 4)));
}

TEST(Search, CirculantGoesThroughGalaxyDigraph) {
  const auto g = circulant(10, 3);
  const auto out = fewNonStarStep(g, Constants::toy(3, 2, 4));
  expectSound(g, out, "circulant");
  EXPECT_EQ(out.branch, Branch::FewDigraph);
  EXPECT_EQ(out.cycle->length(), 4);
}

TEST(Search, ArcColoredCirculantFindsACycle) {
  const auto g = circulant(12, 2);
  const auto out = constructRainbowCycle(g, Constants::toy(2, 2, 4));
  expectSound(g, out, "circulant 12");
  EXPECT_GE(out.cycle->length(), 6);
}

TEST(Search, TriangleNonStarClassStartsABlock) {
  // Vertex 0..2 carry a non-star triangle class; everything else is a star.
  const auto g = EdgeColoredGraph::fromClasses(6, {{"t", {{0, 1}, {1, 2}, {2, 0}}},
                                                   {"a", {{3, 0}, {3, 4}}},
                                                   {"b", {{4, 5}, {4, 1}}},
                                                   {"c", {{5, 3}, {5, 2}}},
                                                   {"d", {{1, 3}, {1, 5}}},
                                                   {"e", {{2, 4}, {2, 3}}}});
  const auto out = fewNonStarStep(g, Constants::toy(3, 2, 100));
  expectSound(g, out, "triangle");
  EXPECT_TRUE(isFewBranch(out.branch));
  EXPECT_GE(out.blockChecks, 1);
}

TEST(Search, UncoveringSetGivesGirthBranch) {
  int girthRuns = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = randomEC(12, 2, seed);
    const auto out = constructRainbowCycle(g, Constants::toy(2, 2, 4));
    expectSound(g, out, "seed " + std::to_string(seed));
    if (out.branch == Branch::ManyGirth) ++girthRuns;
  }
  EXPECT_GT(girthRuns, 30);
}

TEST(Search, EveryBranchFamilyIsSound) {
  std::map<Branch, int> seen;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int r = 2 + static_cast<int>(seed % 3);
    const int n = 6 + static_cast<int>(seed % 9);
    const auto g = randomEC(n, r, seed);
    for (const Constants& c : {Constants::toy(r, 2, 4), Constants::toy(r, 2, 1000)}) {
      const auto out = constructRainbowCycle(g, c, noUncovering());
      expectSound(g, out, "seed " + std::to_string(seed));
      ++seen[out.branch];
    }
  }
  EXPECT_GT(seen[Branch::ManyShortCircuit], 0);
  EXPECT_GT(seen[Branch::FewShortCircuit], 0);
  EXPECT_GT(seen[Branch::FewContraction], 0);
  EXPECT_GT(seen[Branch::FewDigraph], 0);
}

TEST(Search, LayeredInstancesRecurseThroughContraction) {
  int recursed = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = naive::layeredInstance(10, 8, seed);
    ASSERT_TRUE(validate(g, ValidationMode::bounded(2)).ok());
    const auto out = constructRainbowCycle(g, Constants::toy(2, 2, 4), noUncovering());
    expectSound(g, out, "seed " + std::to_string(seed));
    if (out.branch == Branch::ManyRecursion) {
      ++recursed;
      EXPECT_GE(out.trail.size(), 2u);
    }
  }
  EXPECT_GT(recursed, 20);
}

TEST(Search, DepthCapEndsWithDiagnostics) {
  const auto g = naive::layeredInstance(10, 8, 0);
  SearchOptions o = noUncovering();
  o.depthCap = 0;
  const auto out = constructRainbowCycle(g, Constants::toy(2, 2, 4), o);
  if (out.branch == Branch::ManyRecursion) {
    EXPECT_FALSE(out.found());
    ASSERT_FALSE(out.diagnostics.empty());
    EXPECT_NE(out.diagnostics.front().find("depth"), std::string::npos);
  }
}

TEST(Search, BlockInequalityCheckedForEveryBlock) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = randomEC(10, 3, seed);
    const auto cls = classifyVertices(g);
    const auto out = fewNonStarStep(g, Constants::toy(3, 2, 1000));
    expectSound(g, out, "seed " + std::to_string(seed));
    EXPECT_EQ(out.blockChecks, static_cast<int>(cls.nonStars.size()));
  }
}

TEST(Contraction, DeletesInsideColorsAndMergesParallels) {
  // S = {0, 1}; color a lies inside S, b has two edges that merge onto the hub.
  const auto g = EdgeColoredGraph::fromClasses(
      4, {{"a", {{0, 1}, {2, 3}}}, {"b", {{0, 2}, {1, 2}}}, {"c", {{2, 3}, {1, 3}}}, {"d", {{3, 0}}}});
  const Contraction c = contractVertexSet(g, {0, 1});
  EXPECT_EQ(c.graph.vertexCount(), 3);
  EXPECT_EQ(c.hub, 2);
  EXPECT_FALSE(c.graph.colorByName("a"));
  EXPECT_EQ(c.graph.classSize(*c.graph.colorByName("b")), 1);
  EXPECT_EQ(c.graph.classSize(*c.graph.colorByName("c")), 2);
  EXPECT_TRUE(validate(c.graph, ValidationMode::simple()).ok());
  for (EdgeId e = 0; e < c.graph.edgeCount(); ++e)
    EXPECT_EQ(g.colorName(g.edge(c.originEdge[e]).color), c.graph.colorName(c.graph.edge(e).color));
}

TEST(Contraction, LiftedCyclesAreRainbowInTheOriginal) {
  // Every rainbow cycle of the contraction lifts, whether or not it uses the hub.
  int throughHub = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = randomEC(9, 3, seed);
    // S = the vertex set of a rainbow path 0 .. v found by the oracle.
    ColorMask all(g.colorCount(), true);
    auto path = shortestRainbowPath(g, 0, 1 + static_cast<Vertex>(seed % 8), all);
    if (!path) continue;
    std::vector<Vertex> s = path->vertices;
    std::sort(s.begin(), s.end());
    const Contraction c = contractVertexSet(g, s);
    ColorMask inside(g.colorCount(), false);
    for (ColorId col : path->colors) inside[col] = true;
    // Any color with an edge inside S was deleted, so the path colors are disjoint from the lift.
    PathOracle oracle = [&](Vertex a, Vertex b) {
      VertexMask inS(g.vertexCount(), false);
      for (Vertex v : s) inS[v] = true;
      ColorMask deleted(g.colorCount(), false);
      for (const Edge& e : g.edges())
        if (inS[e.u] && inS[e.v]) deleted[e.color] = true;
      return *shortestRainbowPath(g, a, b, deleted, &inS);
    };
    auto cyc = shortestRainbowCycle(c.graph);
    if (!cyc) continue;
    const RainbowCycle lifted = liftContractedCycle(g, c, *cyc, oracle);
    EXPECT_FALSE(cycleProblem(g, lifted)) << "seed " << seed;
    if (std::find(cyc->vertices.begin(), cyc->vertices.end(), c.hub) != cyc->vertices.end()) ++throughHub;
  }
  EXPECT_GT(throughHub, 10);
}
