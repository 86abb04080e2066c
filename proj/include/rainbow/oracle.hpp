#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Closed walk: edges[i] joins vertices[i] and vertices[(i + 1) % length].
/// Length 2 is a digon (two parallel edges of distinct colors).
struct RainbowCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::vector<ColorId> colors;

  int length() const { return static_cast<int>(edges.size()); }
};

/// Open walk: edges[i] joins vertices[i] and vertices[i + 1].
struct RainbowPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::vector<ColorId> colors;

  int length() const { return static_cast<int>(edges.size()); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

RainbowPath trivialPath(Vertex v);
RainbowPath reversed(RainbowPath p);
/// Concatenate a path ending at w with one starting at w.
RainbowPath join(RainbowPath a, const RainbowPath& b);
/// Append edge e (leaving a.back()) to a.
RainbowPath extend(const EdgeColoredGraph& g, RainbowPath a, EdgeId e);
/// Close a path with an edge joining its ends.
RainbowCycle closePath(const EdgeColoredGraph& g, const RainbowPath& p, EdgeId closing);
RainbowCycle cycleFromEdges(const EdgeColoredGraph& g, const std::vector<Vertex>& vertices,
                            const std::vector<EdgeId>& edges);

/// Returns a description of the first broken invariant, or nullopt.
std::optional<std::string> cycleProblem(const EdgeColoredGraph& g, const RainbowCycle& c);
std::optional<std::string> pathProblem(const EdgeColoredGraph& g, const RainbowPath& p);

/// Color membership mask, indexed by ColorId.
using ColorMask = std::vector<bool>;
/// Vertex membership mask, indexed by Vertex.
using VertexMask = std::vector<bool>;

/// Minimum-length rainbow cycle (digons included) of length <= maxLen
/// (default n). Among minimum cycles returns the lexicographically smallest
/// vertex sequence starting from its least vertex.
std::optional<RainbowCycle> shortestRainbowCycle(const EdgeColoredGraph& g, std::optional<int> maxLen = std::nullopt);

/// Minimum-length rainbow path from u to v using only allowed colors and,
/// when given, only allowed vertices.
std::optional<RainbowPath> shortestRainbowPath(const EdgeColoredGraph& g, Vertex u, Vertex v,
                                               const ColorMask& allowedColors,
                                               const VertexMask* allowedVertices = nullptr);

/// A shortest cycle of an undirected multigraph: vertex sequence and edge
/// indices in the same convention as RainbowCycle.
struct CycleWitness {
  std::vector<Vertex> vertices;
  std::vector<int> edges;
};

std::optional<CycleWitness> shortestCycle(const UndirectedGraph& h);
std::optional<int> girth(const UndirectedGraph& h);

/// Vertex sequence v_0 -> v_1 -> ... -> v_0 of a shortest directed cycle.
std::optional<std::vector<Vertex>> shortestDirectedCycle(const Digraph& d);
std::optional<int> directedGirth(const Digraph& d);

/// One representative edge per color (the least by sorted endpoint pair),
/// then a shortest cycle among the representatives. Requires at least n
/// colors; throws std::invalid_argument otherwise.
RainbowCycle baseCaseCycle(const EdgeColoredGraph& g);

}  // namespace rainbow
