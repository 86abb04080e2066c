#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;
using ColorId = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;
  ColorId color;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return u == w || v == w; }
};

/// Undirected multigraph without colors. Used for girth computations.
struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

/// Edge-colored multigraph on vertices 0..n-1.
///
/// Colors are interned: `ColorId` indexes `colorName()`. Every interned color
/// owns at least one edge, so `colorCount()` is |C(G)|. Parallel edges are
/// stored as distinct records; loops and same-color parallels are
/// representable so that `validate` can report them.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;

  /// Throws std::invalid_argument on out-of-range endpoints, out-of-range
  /// colors, or a color name that owns no edge.
  EdgeColoredGraph(int n, std::vector<Edge> edges, std::vector<std::string> colorNames);

  struct ColorClass {
    std::string color;
    std::vector<std::pair<Vertex, Vertex>> edges;
  };
  static EdgeColoredGraph fromClasses(int n, const std::vector<ColorClass>& classes);

  int vertexCount() const { return n_; }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  int colorCount() const { return static_cast<int>(names_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::string& colorName(ColorId c) const { return names_[c]; }
  const std::vector<std::string>& colorNames() const { return names_; }
  std::optional<ColorId> colorByName(const std::string& name) const;

  const std::vector<EdgeId>& classEdges(ColorId c) const { return classes_[c]; }
  int classSize(ColorId c) const { return static_cast<int>(classes_[c].size()); }
  const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }

  /// First edge with endpoints {u, v} and the given color.
  std::optional<EdgeId> findEdge(Vertex u, Vertex v, ColorId c) const;

  UndirectedGraph underlying() const;

 private:
  static std::uint64_t key(Vertex u, Vertex v, ColorId c);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::vector<std::vector<EdgeId>> classes_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Simple digraph: no loops, at most one arc per ordered pair.
class Digraph {
 public:
  Digraph() = default;
  /// Throws std::invalid_argument on loops, duplicate arcs or bad endpoints.
  Digraph(int n, std::vector<std::pair<Vertex, Vertex>> arcs);

  int vertexCount() const { return n_; }
  int arcCount() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  int outDegree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int minOutDegree() const;
  bool hasArc(Vertex u, Vertex v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs_;
  std::vector<std::vector<Vertex>> out_;  // sorted
};

struct Violation {
  std::string rule;
  std::string message;
  std::vector<EdgeId> edges;
  std::vector<ColorId> colors;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Hypothesis sets an input can be checked against.
///  - Simple: no loops, no same-color parallel edges.
///  - BoundedClasses: Simple, exactly n colors, every class size in [2, r].
///  - LargeClasses: Simple, exactly n colors, every class size >= r.
struct ValidationMode {
  enum class Kind { Simple, BoundedClasses, LargeClasses };
  Kind kind = Kind::Simple;
  int r = 0;

  static ValidationMode simple() { return {Kind::Simple, 0}; }
  static ValidationMode bounded(int r) { return {Kind::BoundedClasses, r}; }
  static ValidationMode large(int r) { return {Kind::LargeClasses, r}; }
};

ValidationReport validate(const EdgeColoredGraph& g, ValidationMode mode);

/// Sum over colors c with |c| <= r of (r - |c|). Throws if r < 1.
std::int64_t defect(const EdgeColoredGraph& g, int r);

/// Sum over vertices u with out-degree <= r of (r - deg+(u)). Throws if r < 1.
std::int64_t digraphDefect(const Digraph& d, int r);

struct VertexClassification {
  std::vector<Vertex> stars;     // ascending
  std::vector<Vertex> nonStars;  // ascending; this is the fixed order v_1..v_t
  std::vector<std::vector<ColorId>> starClasses;  // per vertex, ascending color ids

  bool isStar(Vertex v) const { return !starClasses[v].empty(); }
};

/// A color class is a star class when all of its edges share one endpoint.
/// Classes of size 1 have no well-defined center: they are rejected unless
/// `allowSingletons` is set, in which case they never make a vertex a star.
VertexClassification classifyVertices(const EdgeColoredGraph& g, bool allowSingletons = false);

/// The common vertex of all edges of class c, if the class is a star with
/// at least two edges.
std::optional<Vertex> starCenter(const EdgeColoredGraph& g, ColorId c);

}  // namespace rainbow
