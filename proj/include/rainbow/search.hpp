#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/galaxy.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

enum class Branch {
  BaseCase,
  ManyGirth,          // rainbow excess-k subgraph avoiding an uncovering set
  ManyShortCircuit,   // a color-count violation while growing the dense set
  ManyRecursion,      // cycle of the contracted graph, lifted back
  FewShortCircuit,    // non-star edge with both ends in one block
  FewContraction,     // cycle through the contracted blocks
  FewDigraph,         // directed cycle of the galaxy digraph on the remainder
};

std::string branchName(Branch b);
bool isManyBranch(Branch b);
bool isFewBranch(Branch b);

struct SearchOptions {
  std::uint64_t seed = 1;
  int uncoveringSamples = 2000;
  std::int64_t uncoveringEnumerationCap = 200000;
  int depthCap = -1;  // negative: the vertex count of the input
};

struct BranchBound {
  std::string name;
  std::string exact;
  double value = 0.0;
  bool satisfied = true;
};

struct SearchOutcome {
  std::optional<RainbowCycle> cycle;
  Branch branch = Branch::BaseCase;
  std::vector<Branch> trail;  // outermost step first
  std::optional<BranchBound> bound;
  std::optional<BranchBound> guarantee;  // overall length bound, paper preset only
  int blockChecks = 0;                   // block-sum inequalities asserted
  std::vector<std::string> diagnostics;

  bool found() const { return cycle.has_value(); }
};

/// The result of contracting a vertex set S to one hub vertex: colors with
/// an edge inside G[S] are deleted and same-color parallels merged.
struct Contraction {
  EdgeColoredGraph graph;
  std::vector<EdgeId> originEdge;    // per contracted edge, the G edge it came from
  std::vector<Vertex> originVertex;  // per contracted vertex; -1 for the hub
  Vertex hub = -1;
};

Contraction contractVertexSet(const EdgeColoredGraph& g, const std::vector<Vertex>& set);

/// A rainbow cycle of the contraction as a rainbow cycle of G. When the cycle
/// passes the hub, its two hub edges are reconnected inside S with `inside`,
/// which must return rainbow paths over colors deleted by the contraction.
RainbowCycle liftContractedCycle(const EdgeColoredGraph& g, const Contraction& c, const RainbowCycle& cycle,
                                 const PathOracle& inside);

/// Search step for graphs with more than f non-star vertices.
/// Accepts simple graphs with exactly n colors and class sizes in [1, r]
/// (classes shrink to a single edge after contraction).
SearchOutcome manyNonStarStep(const EdgeColoredGraph& g, const Constants& consts, int depth = 0,
                              const SearchOptions& options = {});

/// Search step for graphs with at most f non-star vertices. Same inputs as
/// manyNonStarStep. Throws std::logic_error if a block-sum inequality fails.
SearchOutcome fewNonStarStep(const EdgeColoredGraph& g, const Constants& consts, const SearchOptions& options = {});

/// Full search on an input with exactly n colors and class sizes in [2, r]:
/// base case when n <= alpha, otherwise the step selected by |N| versus f.
/// Throws std::invalid_argument on inputs failing that validation. A toy
/// preset may end without a cycle; the outcome then carries diagnostics.
SearchOutcome constructRainbowCycle(const EdgeColoredGraph& g, const Constants& consts,
                                    const SearchOptions& options = {});

}  // namespace rainbow
