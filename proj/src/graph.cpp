#include "rainbow/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rainbow {

namespace {
constexpr int kMaxId = 1 << 21;
}

EdgeColoredGraph::EdgeColoredGraph(int n, std::vector<Edge> edges, std::vector<std::string> colorNames)
    : n_(n), edges_(std::move(edges)), names_(std::move(colorNames)) {
  if (n < 0 || n >= kMaxId) throw std::invalid_argument("vertex count out of range");
  if (static_cast<int>(names_.size()) >= kMaxId) throw std::invalid_argument("too many colors");
  classes_.resize(names_.size());
  incident_.resize(n_);
  for (EdgeId e = 0; e < edgeCount(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_) {
      throw std::invalid_argument("edge endpoint " + std::to_string(ed.u < 0 || ed.u >= n_ ? ed.u : ed.v) +
                                  " outside [0, " + std::to_string(n_) + ")");
    }
    if (ed.color < 0 || ed.color >= colorCount()) throw std::invalid_argument("edge color out of range");
    classes_[ed.color].push_back(e);
    incident_[ed.u].push_back(e);
    if (ed.v != ed.u) incident_[ed.v].push_back(e);
    index_.try_emplace(key(ed.u, ed.v, ed.color), e);
  }
  for (ColorId c = 0; c < colorCount(); ++c) {
    if (classes_[c].empty()) throw std::invalid_argument("color '" + names_[c] + "' has no edges");
  }
}

EdgeColoredGraph EdgeColoredGraph::fromClasses(int n, const std::vector<ColorClass>& classes) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::map<std::string, ColorId> seen;
  for (const auto& cls : classes) {
    auto [it, fresh] = seen.try_emplace(cls.color, static_cast<ColorId>(names.size()));
    if (fresh) names.push_back(cls.color);
    for (auto [u, v] : cls.edges) edges.push_back({u, v, it->second});
  }
  return EdgeColoredGraph(n, std::move(edges), std::move(names));
}

std::optional<ColorId> EdgeColoredGraph::colorByName(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ColorId>(it - names_.begin());
}

std::uint64_t EdgeColoredGraph::key(Vertex u, Vertex v, ColorId c) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 42) | (static_cast<std::uint64_t>(v) << 21) |
         static_cast<std::uint64_t>(c);
}

std::optional<EdgeId> EdgeColoredGraph::findEdge(Vertex u, Vertex v, ColorId c) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || c < 0 || c >= colorCount()) return std::nullopt;
  auto it = index_.find(key(u, v, c));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

UndirectedGraph EdgeColoredGraph::underlying() const {
  UndirectedGraph h;
  h.n = n_;
  h.edges.reserve(edges_.size());
  for (const Edge& e : edges_) h.edges.emplace_back(e.u, e.v);
  return h;
}

Digraph::Digraph(int n, std::vector<std::pair<Vertex, Vertex>> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw std::invalid_argument("vertex count out of range");
  out_.resize(n_);
  for (auto [u, v] : arcs_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::invalid_argument("arc endpoint outside [0, " + std::to_string(n_) + ")");
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    out_[u].push_back(v);
  }
  for (Vertex u = 0; u < n_; ++u) {
    auto& o = out_[u];
    std::sort(o.begin(), o.end());
    auto dup = std::adjacent_find(o.begin(), o.end());
    if (dup != o.end()) {
      throw std::invalid_argument("duplicate arc (" + std::to_string(u) + "," + std::to_string(*dup) + ")");
    }
  }
}

int Digraph::minOutDegree() const {
  int best = n_ == 0 ? 0 : outDegree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, outDegree(v));
  return best;
}

bool Digraph::hasArc(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

ValidationReport validate(const EdgeColoredGraph& g, ValidationMode mode) {
  ValidationReport report;
  for (EdgeId e = 0; e < g.edgeCount(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) {
      report.violations.push_back({"loop", "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(ed.u),
                                   {e}, {ed.color}});
    }
  }
  for (ColorId c = 0; c < g.colorCount(); ++c) {
    std::map<std::pair<Vertex, Vertex>, EdgeId> pairs;
    for (EdgeId e : g.classEdges(c)) {
      const Edge& ed = g.edge(e);
      auto p = std::minmax(ed.u, ed.v);
      auto [it, fresh] = pairs.try_emplace({p.first, p.second}, e);
      if (!fresh) {
        report.violations.push_back({"parallel-same-color",
                                     "parallel edges in class " + g.colorName(c) + " between " +
                                         std::to_string(p.first) + " and " + std::to_string(p.second),
                                     {it->second, e}, {c}});
      }
    }
  }
  if (mode.kind == ValidationMode::Kind::Simple) return report;

  if (mode.r < 1) {
    report.violations.push_back({"bad-r", "r must be at least 1", {}, {}});
    return report;
  }
  if (g.colorCount() != g.vertexCount()) {
    report.violations.push_back({"color-count",
                                 std::to_string(g.colorCount()) + " colors present but n = " +
                                     std::to_string(g.vertexCount()),
                                 {}, {}});
  }
  for (ColorId c = 0; c < g.colorCount(); ++c) {
    const int size = g.classSize(c);
    if (mode.kind == ValidationMode::Kind::BoundedClasses && (size < 2 || size > mode.r)) {
      report.violations.push_back({"class-size",
                                   "class " + g.colorName(c) + " has size " + std::to_string(size) +
                                       ", expected [2, " + std::to_string(mode.r) + "]",
                                   {}, {c}});
    }
    if (mode.kind == ValidationMode::Kind::LargeClasses && size < mode.r) {
      report.violations.push_back({"class-size",
                                   "class " + g.colorName(c) + " has size " + std::to_string(size) +
                                       ", expected at least " + std::to_string(mode.r),
                                   {}, {c}});
    }
  }
  return report;
}

std::int64_t defect(const EdgeColoredGraph& g, int r) {
  if (r < 1) throw std::invalid_argument("defect: r must be at least 1");
  std::int64_t total = 0;
  for (ColorId c = 0; c < g.colorCount(); ++c) {
    if (g.classSize(c) <= r) total += r - g.classSize(c);
  }
  return total;
}

std::int64_t digraphDefect(const Digraph& d, int r) {
  if (r < 1) throw std::invalid_argument("digraphDefect: r must be at least 1");
  std::int64_t total = 0;
  for (Vertex v = 0; v < d.vertexCount(); ++v) {
    if (d.outDegree(v) <= r) total += r - d.outDegree(v);
  }
  return total;
}

std::optional<Vertex> starCenter(const EdgeColoredGraph& g, ColorId c) {
  const auto& es = g.classEdges(c);
  if (es.size() < 2) return std::nullopt;
  const Edge& first = g.edge(es[0]);
  for (Vertex cand : {first.u, first.v}) {
    bool all = std::all_of(es.begin(), es.end(), [&](EdgeId e) { return g.edge(e).touches(cand); });
    if (all) return cand;
  }
  return std::nullopt;
}

VertexClassification classifyVertices(const EdgeColoredGraph& g, bool allowSingletons) {
  VertexClassification out;
  out.starClasses.resize(g.vertexCount());
  for (ColorId c = 0; c < g.colorCount(); ++c) {
    if (g.classSize(c) < 2) {
      if (allowSingletons) continue;
      throw std::invalid_argument("class " + g.colorName(c) + " has a single edge; its star center is ambiguous");
    }
    if (auto center = starCenter(g, c)) out.starClasses[*center].push_back(c);
  }
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    (out.starClasses[v].empty() ? out.nonStars : out.stars).push_back(v);
  }
  return out;
}

}  // namespace rainbow
