#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "rainbow/galaxy.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rng.hpp"

namespace rainbow::fixture {

/// A random valid galaxy path query: X = {0..|X|-1} spanned by a rainbow
/// tree, roots |X|.. with 1..r leaves among X and earlier roots, and a few
/// noise edges in unrelated colors. The X oracle is the exact shortest
/// rainbow path inside G[X].
struct GalaxyCase {
  std::shared_ptr<EdgeColoredGraph> g;
  GalaxyPathQuery query;
  std::vector<Vertex> members;
};

inline GalaxyCase randomGalaxyCase(std::uint64_t seed, int maxX = 6, int maxM = 8) {
  SplitMix64 rng(seed);
  const int r = static_cast<int>(rng.between(2, 4));
  const int xs = static_cast<int>(rng.between(1, maxX));
  const int m = static_cast<int>(rng.between(0, maxM));
  const int n = xs + m;

  std::vector<Edge> edges;
  std::vector<std::string> names;
  auto newColor = [&](const std::string& name) {
    names.push_back(name);
    return static_cast<ColorId>(names.size() - 1);
  };
  for (Vertex v = 1; v < xs; ++v) {
    const Vertex parent = static_cast<Vertex>(rng.below(v));
    edges.push_back({parent, v, newColor("x" + std::to_string(v))});
  }
  Galaxy gal;
  for (int i = 0; i < m; ++i) {
    const Vertex root = xs + i;
    std::vector<Vertex> pool(root);
    for (Vertex v = 0; v < root; ++v) pool[v] = v;
    rng.shuffle(pool);
    const int leaves = static_cast<int>(rng.between(1, std::min<int>(r, root)));
    Star s{root, newColor("m" + std::to_string(i)), {}};
    for (int j = 0; j < leaves; ++j) {
      s.leaves.push_back(pool[j]);
      edges.push_back({root, pool[j], s.color});
    }
    std::sort(s.leaves.begin(), s.leaves.end());
    gal.add(std::move(s));
  }
  const int noise = static_cast<int>(rng.below(4));
  for (int i = 0; i < noise && n >= 2; ++i) {
    const Vertex a = static_cast<Vertex>(rng.below(n));
    Vertex b = static_cast<Vertex>(rng.below(n));
    if (a == b) b = (a + 1) % n;
    edges.push_back({a, b, newColor("z" + std::to_string(i))});
  }

  GalaxyCase out;
  out.g = std::make_shared<EdgeColoredGraph>(n, edges, names);
  const EdgeColoredGraph& g = *out.g;
  GalaxyPathQuery q;
  q.r = r;
  q.galaxy = gal;
  q.xColors.assign(g.colorCount(), false);
  for (Vertex v = 1; v < xs; ++v) q.xColors[*g.colorByName("x" + std::to_string(v))] = true;
  for (Vertex v = 0; v < xs; ++v) q.x.push_back(v);
  auto inX = std::make_shared<VertexMask>(n, false);
  for (Vertex v = 0; v < xs; ++v) (*inX)[v] = true;
  const auto gp = out.g;
  const ColorMask xColors = q.xColors;
  q.xOracle = [gp, xColors, inX](Vertex a, Vertex b) { return *shortestRainbowPath(*gp, a, b, xColors, inX.get()); };
  int budget = 0;
  for (Vertex a = 0; a < xs; ++a)
    for (Vertex b = a + 1; b < xs; ++b) budget = std::max(budget, q.xOracle(a, b).length());
  q.xBudget = budget;
  out.query = std::move(q);
  for (Vertex v = 0; v < n; ++v) out.members.push_back(v);
  return out;
}

}  // namespace rainbow::fixture
