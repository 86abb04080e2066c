#include "rainbow/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace rainbow {

EdgeColoredGraph digraphToColoredGraph(const Digraph& d) {
  std::vector<EdgeColoredGraph::ColorClass> classes;
  for (Vertex u = 0; u < d.vertexCount(); ++u) {
    if (d.outDegree(u) == 0) continue;
    EdgeColoredGraph::ColorClass cls{std::to_string(u), {}};
    for (Vertex v : d.out(u)) cls.edges.emplace_back(u, v);
    classes.push_back(std::move(cls));
  }
  return EdgeColoredGraph::fromClasses(d.vertexCount(), classes);
}

std::vector<Vertex> orientRainbowCycle(const EdgeColoredGraph& image, const RainbowCycle& c) {
  const int len = c.length();
  auto tail = [&](int i) { return std::stoi(image.colorName(c.colors[i])); };
  bool forward = true, backward = true;
  for (int i = 0; i < len; ++i) {
    forward = forward && tail(i) == c.vertices[i];
    backward = backward && tail(i) == c.vertices[(i + 1) % len];
  }
  if (forward) return c.vertices;
  if (backward) {
    std::vector<Vertex> out{c.vertices[0]};
    for (int i = len - 1; i > 0; --i) out.push_back(c.vertices[i]);
    return out;
  }
  throw std::logic_error("rainbow cycle of the arc coloring is not consistently oriented");
}

GalaxyDigraph galaxyDigraph(const std::vector<Vertex>& w, const Galaxy& m) {
  GalaxyDigraph out;
  out.vertices = w;
  std::sort(out.vertices.begin(), out.vertices.end());
  std::map<Vertex, int> local;
  for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i) local[out.vertices[i]] = i;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (int i = 0; i < static_cast<int>(out.vertices.size()); ++i) {
    const Vertex v = out.vertices[i];
    auto idx = m.indexOf(v);
    if (!idx) throw std::invalid_argument("galaxyDigraph: vertex " + std::to_string(v) + " is not a galaxy root");
    bool any = false;
    for (Vertex leaf : m[*idx].leaves) {
      auto it = local.find(leaf);
      if (it == local.end()) continue;
      arcs.emplace_back(i, it->second);
      any = true;
    }
    if (!any) throw std::invalid_argument("galaxyDigraph: vertex " + std::to_string(v) + " would be a sink");
  }
  out.digraph = Digraph(static_cast<int>(out.vertices.size()), std::move(arcs));
  return out;
}

RainbowCycle liftGalaxyCycle(const EdgeColoredGraph& g, const GalaxyDigraph& d, const Galaxy& m,
                             const std::vector<Vertex>& directedCycle) {
  const int len = static_cast<int>(directedCycle.size());
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  for (int i = 0; i < len; ++i) {
    const Vertex from = d.vertices[directedCycle[i]];
    const Vertex to = d.vertices[directedCycle[(i + 1) % len]];
    const Star& s = m[*m.indexOf(from)];
    auto e = g.findEdge(from, to, s.color);
    if (!e) throw std::logic_error("liftGalaxyCycle: missing star edge");
    vertices.push_back(from);
    edges.push_back(*e);
  }
  return cycleFromEdges(g, vertices, edges);
}

}  // namespace rainbow
