#include "rainbow/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rainbow {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct Arc {
  Vertex to;
  EdgeId edge;
  ColorId color;
};

// Adjacency with loops dropped, each list sorted by (neighbor, color).
std::vector<std::vector<Arc>> sortedAdjacency(const EdgeColoredGraph& g) {
  std::vector<std::vector<Arc>> adj(g.vertexCount());
  for (EdgeId e = 0; e < g.edgeCount(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) continue;
    adj[ed.u].push_back({ed.v, e, ed.color});
    adj[ed.v].push_back({ed.u, e, ed.color});
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) {
      return std::tie(a.to, a.color, a.edge) < std::tie(b.to, b.color, b.edge);
    });
  }
  return adj;
}

class CycleSearch {
 public:
  CycleSearch(const EdgeColoredGraph& g, const std::vector<std::vector<Arc>>& adj)
      : g_(g), adj_(adj), usedColor_(g.colorCount(), false), onPath_(g.vertexCount(), false) {}

  // distTo_[s][w]: distance from w to s inside the subgraph on vertices >= s.
  void prepare() {
    const int n = g_.vertexCount();
    distTo_.assign(n, std::vector<int>(n, kInf));
    for (Vertex s = 0; s < n; ++s) {
      auto& dist = distTo_[s];
      std::deque<Vertex> queue{s};
      dist[s] = 0;
      while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const Arc& a : adj_[x]) {
          if (a.to < s || dist[a.to] != kInf) continue;
          dist[a.to] = dist[x] + 1;
          queue.push_back(a.to);
        }
      }
    }
  }

  bool run(Vertex s, int length) {
    start_ = s;
    dist_ = &distTo_[s];
    target_ = length;
    vertices_.assign(1, start_);
    edges_.clear();
    onPath_[start_] = true;
    bool found = dfs(start_, 0);
    onPath_[start_] = false;
    return found;
  }

  RainbowCycle witness() const { return cycleFromEdges(g_, vertices_, edges_); }

 private:
  bool dfs(Vertex cur, int depth) {
    for (const Arc& a : adj_[cur]) {
      if (usedColor_[a.color]) continue;
      if (depth + 1 == target_) {
        if (a.to != start_) continue;
        edges_.push_back(a.edge);
        return true;
      }
      if (a.to <= start_ || onPath_[a.to]) continue;
      if ((*dist_)[a.to] > target_ - depth - 1) continue;
      usedColor_[a.color] = true;
      onPath_[a.to] = true;
      vertices_.push_back(a.to);
      edges_.push_back(a.edge);
      bool found = dfs(a.to, depth + 1);
      usedColor_[a.color] = false;
      onPath_[a.to] = false;
      if (found) return true;
      vertices_.pop_back();
      edges_.pop_back();
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  const std::vector<std::vector<Arc>>& adj_;
  std::vector<bool> usedColor_;
  std::vector<bool> onPath_;
  std::vector<std::vector<int>> distTo_;
  const std::vector<int>* dist_ = nullptr;
  std::vector<Vertex> vertices_;
  std::vector<EdgeId> edges_;
  Vertex start_ = 0;
  int target_ = 0;
};

class PathSearch {
 public:
  PathSearch(const EdgeColoredGraph& g, Vertex from, Vertex to, const ColorMask& colors, const VertexMask* allowed)
      : g_(g), from_(from), to_(to), usedColor_(g.colorCount(), false), onPath_(g.vertexCount(), false) {
    adj_.resize(g.vertexCount());
    auto ok = [&](Vertex w) { return allowed == nullptr || (*allowed)[w]; };
    for (EdgeId e = 0; e < g.edgeCount(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.u == ed.v || !colors[ed.color] || !ok(ed.u) || !ok(ed.v)) continue;
      adj_[ed.u].push_back({ed.v, e, ed.color});
      adj_[ed.v].push_back({ed.u, e, ed.color});
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) {
        return std::tie(a.to, a.color, a.edge) < std::tie(b.to, b.color, b.edge);
      });
    }
    dist_.assign(g.vertexCount(), kInf);
    std::deque<Vertex> queue{to};
    dist_[to] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (const Arc& a : adj_[x]) {
        if (dist_[a.to] != kInf) continue;
        dist_[a.to] = dist_[x] + 1;
        queue.push_back(a.to);
      }
    }
  }

  std::optional<RainbowPath> run() {
    if (dist_[from_] == kInf) return std::nullopt;
    const int cap = std::min(g_.vertexCount() - 1, g_.colorCount());
    for (int len = dist_[from_]; len <= cap; ++len) {
      target_ = len;
      path_ = trivialPath(from_);
      onPath_[from_] = true;
      bool found = dfs(from_, 0);
      onPath_[from_] = false;
      if (found) return path_;
    }
    return std::nullopt;
  }

 private:
  bool dfs(Vertex cur, int depth) {
    if (depth == target_) return cur == to_;
    for (const Arc& a : adj_[cur]) {
      if (usedColor_[a.color] || onPath_[a.to]) continue;
      if (dist_[a.to] > target_ - depth - 1) continue;
      usedColor_[a.color] = true;
      onPath_[a.to] = true;
      path_.vertices.push_back(a.to);
      path_.edges.push_back(a.edge);
      path_.colors.push_back(a.color);
      bool found = dfs(a.to, depth + 1);
      usedColor_[a.color] = false;
      onPath_[a.to] = false;
      if (found) return true;
      path_.vertices.pop_back();
      path_.edges.pop_back();
      path_.colors.pop_back();
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  Vertex from_;
  Vertex to_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<bool> usedColor_;
  std::vector<bool> onPath_;
  std::vector<int> dist_;
  RainbowPath path_;
  int target_ = 0;
};

}  // namespace

RainbowPath trivialPath(Vertex v) { return RainbowPath{{v}, {}, {}}; }

RainbowPath reversed(RainbowPath p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  std::reverse(p.colors.begin(), p.colors.end());
  return p;
}

RainbowPath join(RainbowPath a, const RainbowPath& b) {
  if (a.back() != b.front()) throw std::logic_error("join: paths do not meet");
  a.vertices.insert(a.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
  a.colors.insert(a.colors.end(), b.colors.begin(), b.colors.end());
  return a;
}

RainbowPath extend(const EdgeColoredGraph& g, RainbowPath a, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!ed.touches(a.back())) throw std::logic_error("extend: edge does not leave the path end");
  a.vertices.push_back(ed.other(a.back()));
  a.edges.push_back(e);
  a.colors.push_back(ed.color);
  return a;
}

RainbowCycle closePath(const EdgeColoredGraph& g, const RainbowPath& p, EdgeId closing) {
  const Edge& ed = g.edge(closing);
  if (!(ed.touches(p.front()) && ed.other(p.front()) == p.back())) {
    throw std::logic_error("closePath: closing edge does not join the path ends");
  }
  std::vector<EdgeId> edges = p.edges;
  edges.push_back(closing);
  return cycleFromEdges(g, p.vertices, edges);
}

RainbowCycle cycleFromEdges(const EdgeColoredGraph& g, const std::vector<Vertex>& vertices,
                            const std::vector<EdgeId>& edges) {
  RainbowCycle c{vertices, edges, {}};
  c.colors.reserve(edges.size());
  for (EdgeId e : edges) c.colors.push_back(g.edge(e).color);
  return c;
}

std::optional<std::string> cycleProblem(const EdgeColoredGraph& g, const RainbowCycle& c) {
  const int len = c.length();
  if (len < 2) return "cycle has fewer than two edges";
  if (static_cast<int>(c.vertices.size()) != len) return "vertex and edge counts differ";
  if (static_cast<int>(c.colors.size()) != len) return "color and edge counts differ";
  std::set<Vertex> vs;
  std::set<ColorId> cs;
  std::set<EdgeId> es;
  for (int i = 0; i < len; ++i) {
    EdgeId e = c.edges[i];
    if (e < 0 || e >= g.edgeCount()) return "edge id out of range";
    const Edge& ed = g.edge(e);
    Vertex a = c.vertices[i];
    Vertex b = c.vertices[(i + 1) % len];
    if (a == b) return "loop on cycle";
    if (!(ed.touches(a) && ed.other(a) == b)) return "edge " + std::to_string(e) + " does not join consecutive vertices";
    if (ed.color != c.colors[i]) return "recorded color differs from edge color";
    if (!vs.insert(a).second) return "repeated vertex " + std::to_string(a);
    if (!cs.insert(ed.color).second) return "repeated color " + g.colorName(ed.color);
    if (!es.insert(e).second) return "repeated edge";
  }
  return std::nullopt;
}

std::optional<std::string> pathProblem(const EdgeColoredGraph& g, const RainbowPath& p) {
  if (p.vertices.empty()) return "path has no vertices";
  if (p.vertices.size() != p.edges.size() + 1) return "vertex and edge counts differ";
  if (p.colors.size() != p.edges.size()) return "color and edge counts differ";
  std::set<Vertex> vs{p.vertices[0]};
  std::set<ColorId> cs;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    EdgeId e = p.edges[i];
    if (e < 0 || e >= g.edgeCount()) return "edge id out of range";
    const Edge& ed = g.edge(e);
    Vertex a = p.vertices[i];
    Vertex b = p.vertices[i + 1];
    if (a == b || !(ed.touches(a) && ed.other(a) == b)) {
      return "edge " + std::to_string(e) + " does not join consecutive vertices";
    }
    if (ed.color != p.colors[i]) return "recorded color differs from edge color";
    if (!vs.insert(b).second) return "repeated vertex " + std::to_string(b);
    if (!cs.insert(ed.color).second) return "repeated color " + g.colorName(ed.color);
  }
  return std::nullopt;
}

std::optional<RainbowCycle> shortestRainbowCycle(const EdgeColoredGraph& g, std::optional<int> maxLen) {
  const int n = g.vertexCount();
  const int cap = std::min(maxLen.value_or(n), std::min(n, g.colorCount()));
  if (cap < 2) return std::nullopt;
  auto adj = sortedAdjacency(g);
  CycleSearch search(g, adj);
  search.prepare();
  for (int len = 2; len <= cap; ++len) {
    for (Vertex s = 0; s < n; ++s) {
      if (search.run(s, len)) return search.witness();
    }
  }
  return std::nullopt;
}

std::optional<RainbowPath> shortestRainbowPath(const EdgeColoredGraph& g, Vertex u, Vertex v,
                                               const ColorMask& allowedColors, const VertexMask* allowedVertices) {
  if (u < 0 || v < 0 || u >= g.vertexCount() || v >= g.vertexCount()) {
    throw std::invalid_argument("shortestRainbowPath: vertex out of range");
  }
  if (static_cast<int>(allowedColors.size()) != g.colorCount()) {
    throw std::invalid_argument("shortestRainbowPath: color mask size mismatch");
  }
  if (allowedVertices != nullptr && (!(*allowedVertices)[u] || !(*allowedVertices)[v])) return std::nullopt;
  if (u == v) return trivialPath(u);
  return PathSearch(g, u, v, allowedColors, allowedVertices).run();
}

std::optional<CycleWitness> shortestCycle(const UndirectedGraph& h) {
  const int n = h.n;
  std::vector<std::vector<std::pair<Vertex, int>>> adj(n);
  for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
    auto [u, v] = h.edges[e];
    if (u == v) continue;
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  std::optional<CycleWitness> best;
  std::vector<int> dist(n);
  std::vector<int> parentEdge(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parentEdge[s] = -1;
    parent[s] = -1;
    std::deque<Vertex> queue{s};
    int bestHere = best ? static_cast<int>(best->edges.size()) : kInf;
    std::optional<std::pair<Vertex, int>> closing;  // (x, edge) with both ends reached
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] >= bestHere) break;
      for (auto [y, e] : adj[x]) {
        if (e == parentEdge[x]) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          parentEdge[y] = e;
          queue.push_back(y);
        } else if (dist[x] + dist[y] + 1 < bestHere) {
          bestHere = dist[x] + dist[y] + 1;
          closing = {x, e};
        }
      }
    }
    if (!closing) continue;
    auto [x, e] = *closing;
    Vertex y = h.edges[e].first == x ? h.edges[e].second : h.edges[e].first;
    // Walk both tree paths up to their meeting point.
    std::vector<Vertex> left{x}, right{y};
    std::vector<int> leftEdges, rightEdges;
    Vertex a = x, b = y;
    while (a != b) {
      if (dist[a] >= dist[b]) {
        leftEdges.push_back(parentEdge[a]);
        a = parent[a];
        left.push_back(a);
      } else {
        rightEdges.push_back(parentEdge[b]);
        b = parent[b];
        right.push_back(b);
      }
    }
    // Cycle: meet -> ... -> x -(e)- y -> ... -> meet.
    CycleWitness w;
    for (auto it = left.rbegin(); it != left.rend(); ++it) w.vertices.push_back(*it);
    for (auto it = leftEdges.rbegin(); it != leftEdges.rend(); ++it) w.edges.push_back(*it);
    w.edges.push_back(e);
    for (std::size_t i = 0; i + 1 < right.size(); ++i) w.vertices.push_back(right[i]);
    for (int re : rightEdges) w.edges.push_back(re);
    if (!best || w.edges.size() < best->edges.size()) best = std::move(w);
  }
  return best;
}

std::optional<int> girth(const UndirectedGraph& h) {
  auto c = shortestCycle(h);
  if (!c) return std::nullopt;
  return static_cast<int>(c->edges.size());
}

std::optional<std::vector<Vertex>> shortestDirectedCycle(const Digraph& d) {
  const int n = d.vertexCount();
  std::optional<std::vector<Vertex>> best;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    std::optional<Vertex> last;
    const int limit = best ? static_cast<int>(best->size()) : kInf;
    while (!queue.empty() && !last) {
      Vertex x = queue.front();
      queue.pop_front();
      if (dist[x] + 1 >= limit) break;
      for (Vertex y : d.out(x)) {
        if (y == s) {
          last = x;
          break;
        }
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (!last) continue;
    std::vector<Vertex> cycle;
    for (Vertex x = *last; x != s; x = parent[x]) cycle.push_back(x);
    cycle.push_back(s);
    std::reverse(cycle.begin(), cycle.end());
    best = std::move(cycle);
  }
  return best;
}

std::optional<int> directedGirth(const Digraph& d) {
  auto c = shortestDirectedCycle(d);
  if (!c) return std::nullopt;
  return static_cast<int>(c->size());
}

RainbowCycle baseCaseCycle(const EdgeColoredGraph& g) {
  if (g.colorCount() < g.vertexCount()) {
    throw std::invalid_argument("baseCaseCycle: " + std::to_string(g.colorCount()) + " colors on " +
                                std::to_string(g.vertexCount()) + " vertices");
  }
  std::vector<EdgeId> reps;
  for (ColorId c = 0; c < g.colorCount(); ++c) {
    EdgeId best = -1;
    std::pair<Vertex, Vertex> bestKey;
    for (EdgeId e : g.classEdges(c)) {
      auto k = std::minmax(g.edge(e).u, g.edge(e).v);
      std::pair<Vertex, Vertex> key{k.first, k.second};
      if (best < 0 || key < bestKey) {
        best = e;
        bestKey = key;
      }
    }
    reps.push_back(best);
  }
  UndirectedGraph h;
  h.n = g.vertexCount();
  for (EdgeId e : reps) h.edges.emplace_back(g.edge(e).u, g.edge(e).v);
  auto w = shortestCycle(h);
  if (!w) throw std::logic_error("baseCaseCycle: representative subgraph is acyclic");
  std::vector<EdgeId> edges;
  for (int i : w->edges) edges.push_back(reps[i]);
  return cycleFromEdges(g, w->vertices, edges);
}

}  // namespace rainbow
