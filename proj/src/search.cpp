#include "rainbow/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <tuple>

#include "rainbow/covering.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

std::string branchName(Branch b) {
  switch (b) {
    case Branch::BaseCase: return "base-case";
    case Branch::ManyGirth: return "many-nonstar-girth";
    case Branch::ManyShortCircuit: return "many-nonstar-short-circuit";
    case Branch::ManyRecursion: return "many-nonstar-recursion";
    case Branch::FewShortCircuit: return "few-nonstar-short-circuit";
    case Branch::FewContraction: return "few-nonstar-contraction";
    case Branch::FewDigraph: return "few-nonstar-digraph";
  }
  return "unknown";
}

bool isManyBranch(Branch b) {
  return b == Branch::ManyGirth || b == Branch::ManyShortCircuit || b == Branch::ManyRecursion;
}

bool isFewBranch(Branch b) {
  return b == Branch::FewShortCircuit || b == Branch::FewContraction || b == Branch::FewDigraph;
}

namespace {

/// A vertex set with a rainbow path oracle over `colors` inside it.
struct PathSet {
  std::vector<Vertex> vertices;  // ascending
  VertexMask member;
  ColorMask colors;
  PathOracle oracle;
};

struct Context {
  Constants consts;
  SearchOptions opts;
};

int maxPathLength(const PathSet& s) {
  int best = 0;
  for (std::size_t i = 0; i < s.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
      best = std::max(best, s.oracle(s.vertices[i], s.vertices[j]).length());
  return best;
}

RainbowCycle closedWalkToCycle(const EdgeColoredGraph& g, const RainbowPath& walk) {
  if (walk.front() != walk.back()) throw std::logic_error("walk is not closed");
  std::vector<Vertex> vs(walk.vertices.begin(), walk.vertices.end() - 1);
  return cycleFromEdges(g, vs, walk.edges);
}

BranchBound makeBound(std::string name, const Rational& value, int length) {
  return {std::move(name), toString(value), toDouble(value), Rational(length) <= value};
}

SearchOutcome withCycle(const EdgeColoredGraph& g, RainbowCycle c, Branch b) {
  if (auto problem = cycleProblem(g, c)) {
    throw std::logic_error(branchName(b) + " produced an invalid cycle: " + *problem);
  }
  SearchOutcome out;
  out.cycle = std::move(c);
  out.branch = b;
  out.trail = {b};
  return out;
}

SearchOutcome failure(Branch b, std::string message) {
  SearchOutcome out;
  out.branch = b;
  out.trail = {b};
  out.diagnostics.push_back(std::move(message));
  return out;
}

/// Least edge inside the set whose color the set's oracle does not use.
std::optional<EdgeId> foreignEdge(const EdgeColoredGraph& g, const PathSet& s) {
  std::optional<EdgeId> best;
  for (Vertex v : s.vertices) {
    for (EdgeId e : g.incident(v)) {
      const Edge& ed = g.edge(e);
      if (s.member[ed.other(v)] && !s.colors[ed.color] && (!best || e < *best)) best = e;
    }
  }
  return best;
}

RainbowCycle closeWithEdge(const EdgeColoredGraph& g, const PathSet& s, EdgeId e) {
  const Edge& ed = g.edge(e);
  return closePath(g, s.oracle(ed.u, ed.v), e);
}

PathSet fromBuilder(const EdgeColoredGraph& g, const std::shared_ptr<GalaxyPathBuilder>& builder) {
  PathSet t;
  t.vertices = builder->vertices();
  t.member.assign(g.vertexCount(), false);
  for (Vertex v : t.vertices) t.member[v] = true;
  t.colors = builder->query().xColors;
  for (ColorId c : builder->query().galaxy.colors()) t.colors[c] = true;
  t.oracle = [builder](Vertex a, Vertex b) { return builder->path(a, b); };
  return t;
}

/// T plus pendant vertices, each hung on T by its own edge; the edge colors
/// must be pairwise distinct and absent from T.
PathSet attachPendants(const EdgeColoredGraph& g, const PathSet& t, const std::map<Vertex, EdgeId>& pendants) {
  PathSet s = t;
  for (const auto& [y, e] : pendants) {
    s.member[y] = true;
    s.vertices.push_back(y);
    s.colors[g.edge(e).color] = true;
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  const EdgeColoredGraph* gp = &g;
  PathOracle inner = t.oracle;
  s.oracle = [gp, inner, pendants](Vertex a, Vertex b) {
    if (a == b) return trivialPath(a);
    RainbowPath left = trivialPath(a), right = trivialPath(b);
    if (auto it = pendants.find(a); it != pendants.end()) left = extend(*gp, left, it->second);
    if (auto it = pendants.find(b); it != pendants.end()) right = extend(*gp, right, it->second);
    return join(join(left, inner(left.back(), right.back())), reversed(right));
  };
  return s;
}

/// Maximum rainbow star at v: a bipartite matching of incident colors to
/// neighbors (augmenting paths).
std::vector<EdgeId> maximumRainbowStar(const EdgeColoredGraph& g, Vertex v) {
  std::map<ColorId, std::vector<Vertex>> byColor;
  for (EdgeId e : g.incident(v)) byColor[g.edge(e).color].push_back(g.edge(e).other(v));
  std::vector<ColorId> colors;
  std::vector<std::vector<Vertex>> nbrs;
  for (auto& [c, ws] : byColor) {
    std::sort(ws.begin(), ws.end());
    colors.push_back(c);
    nbrs.push_back(ws);
  }
  std::vector<int> matchOf(g.vertexCount(), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int ci) {
    for (Vertex w : nbrs[ci]) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (matchOf[w] < 0 || augment(matchOf[w])) {
        matchOf[w] = ci;
        return true;
      }
    }
    return false;
  };
  for (int ci = 0; ci < static_cast<int>(colors.size()); ++ci) {
    seen.assign(g.vertexCount(), 0);
    augment(ci);
  }
  std::vector<EdgeId> star;
  for (Vertex w = 0; w < g.vertexCount(); ++w) {
    if (matchOf[w] >= 0) star.push_back(*g.findEdge(v, w, colors[matchOf[w]]));
  }
  return star;
}

PathSet starSet(const EdgeColoredGraph& g, Vertex center, const std::vector<EdgeId>& star) {
  PathSet s;
  s.member.assign(g.vertexCount(), false);
  s.colors.assign(g.colorCount(), false);
  s.member[center] = true;
  s.vertices.push_back(center);
  std::map<Vertex, EdgeId> leafEdge;
  for (EdgeId e : star) {
    leafEdge[g.edge(e).other(center)] = e;
  }
  PathSet hub = s;
  hub.oracle = [](Vertex a, Vertex) { return trivialPath(a); };
  return attachPendants(g, hub, leafEdge);
}

SearchOutcome dispatch(const EdgeColoredGraph& g, const Context& ctx, int depth);

SearchOutcome manyImpl(const EdgeColoredGraph& g, const Context& ctx, int depth, const VertexClassification& cls) {
  const int n = g.vertexCount();
  const int r = ctx.consts.r;
  const std::vector<Vertex>& nonStars = cls.nonStars;

  // Uncovering set: one edge per class avoiding it gives n edges on n - k vertices.
  const int k = static_cast<int>(ctx.consts.k);
  UncoveringOptions uo{deriveSeed(ctx.opts.seed, static_cast<std::uint64_t>(depth)), ctx.opts.uncoveringSamples,
                       ctx.opts.uncoveringEnumerationCap};
  if (auto avoid = findUncoveringSet(g, nonStars, k, uo)) {
    VertexMask out(n, false);
    for (Vertex v : *avoid) out[v] = true;
    UndirectedGraph h{n, {}};
    std::vector<EdgeId> origin;
    for (ColorId c = 0; c < g.colorCount(); ++c) {
      for (EdgeId e : g.classEdges(c)) {
        const Edge& ed = g.edge(e);
        if (out[ed.u] || out[ed.v]) continue;
        h.edges.emplace_back(ed.u, ed.v);
        origin.push_back(e);
        break;
      }
    }
    auto w = shortestCycle(h);
    if (!w) throw std::logic_error("rainbow subgraph avoiding an uncovering set is acyclic");
    std::vector<EdgeId> edges;
    for (int i : w->edges) edges.push_back(origin[i]);
    SearchOutcome out2 = withCycle(g, cycleFromEdges(g, w->vertices, edges), Branch::ManyGirth);
    if (n - k >= 4 && k >= 2) {
      const double b = excessGirthBound(n - k, k);
      out2.bound = BranchBound{"excess-girth", std::to_string(b), b, out2.cycle->length() <= b + 1e-9};
    }
    return out2;
  }

  // Dense rainbow star at the non-star vertex with the most incident colors.
  Vertex center = -1;
  std::size_t most = 0;
  for (Vertex v : nonStars) {
    std::set<ColorId> cs;
    for (EdgeId e : g.incident(v)) cs.insert(g.edge(e).color);
    if (cs.size() > most) {
      most = cs.size();
      center = v;
    }
  }
  if (center < 0) return failure(Branch::ManyShortCircuit, "no non-star vertex has an incident edge");
  PathSet s = starSet(g, center, maximumRainbowStar(g, center));
  int x = maxPathLength(s);

  auto shortCircuit = [&](const PathSet& set, EdgeId e, const Rational& bound) {
    SearchOutcome o = withCycle(g, closeWithEdge(g, set, e), Branch::ManyShortCircuit);
    o.bound = makeBound("short-circuit", bound, o.cycle->length());
    return o;
  };

  for (int round = 0; round <= n; ++round) {
    if (auto e = foreignEdge(g, s)) return shortCircuit(s, *e, Rational(x + 1));

    // Absorb star roots whose whole class lands in the set.
    Galaxy gal;
    VertexMask inside = s.member;
    for (bool progress = true; progress;) {
      progress = false;
      for (Vertex w = 0; w < n; ++w) {
        if (inside[w]) continue;
        for (ColorId c : cls.starClasses[w]) {
          Star star{w, c, {}};
          bool all = true;
          for (EdgeId e : g.classEdges(c)) {
            Vertex leaf = g.edge(e).other(w);
            all = all && inside[leaf];
            star.leaves.push_back(leaf);
          }
          if (!all) continue;
          std::sort(star.leaves.begin(), star.leaves.end());
          gal.add(std::move(star));
          inside[w] = true;
          progress = true;
          break;
        }
      }
    }
    auto builder = std::make_shared<GalaxyPathBuilder>(g, GalaxyPathQuery{s.vertices, s.colors, x, s.oracle, gal, r});
    PathSet t = fromBuilder(g, builder);
    const Rational tBound = builder->bound();
    if (auto e = foreignEdge(g, t)) return shortCircuit(t, *e, tBound + 1);

    // One edge with exactly one end in T per class missing from G[T].
    std::map<Vertex, EdgeId> pendants;
    for (ColorId c = 0; c < g.colorCount(); ++c) {
      if (t.colors[c]) continue;
      for (EdgeId e : g.classEdges(c)) {
        const Edge& ed = g.edge(e);
        if (t.member[ed.u] == t.member[ed.v]) continue;
        const Vertex y = t.member[ed.u] ? ed.v : ed.u;
        auto [it, fresh] = pendants.emplace(y, e);
        if (!fresh) {
          // Two classes reach the same outside vertex: close through T.
          const Edge& first = g.edge(it->second);
          const Vertex t1 = first.other(y), t2 = ed.other(y);
          RainbowPath walk = extend(g, trivialPath(y), it->second);
          walk = join(walk, t.oracle(t1, t2));
          walk = extend(g, walk, e);
          SearchOutcome o = withCycle(g, closedWalkToCycle(g, walk), Branch::ManyShortCircuit);
          o.bound = makeBound("short-circuit", tBound + 2, o.cycle->length());
          return o;
        }
        break;
      }
    }
    PathSet grown = attachPendants(g, t, pendants);
    if (auto e = foreignEdge(g, grown)) return shortCircuit(grown, *e, tBound + 3);
    if (static_cast<int>(pendants.size()) >= 4 * r) {
      s = std::move(grown);
      x = maxPathLength(s);
      continue;
    }

    // Contract T, recurse, lift.
    Contraction con = contractVertexSet(g, t.vertices);
    SearchOutcome inner = dispatch(con.graph, ctx, depth + 1);
    SearchOutcome out;
    out.branch = Branch::ManyRecursion;
    out.trail = {Branch::ManyRecursion};
    out.trail.insert(out.trail.end(), inner.trail.begin(), inner.trail.end());
    out.blockChecks = inner.blockChecks;
    out.diagnostics = inner.diagnostics;
    if (!inner.found()) return out;
    RainbowCycle lifted = liftContractedCycle(g, con, *inner.cycle, t.oracle);
    if (auto problem = cycleProblem(g, lifted)) throw std::logic_error("lifted cycle is invalid: " + *problem);
    out.bound = makeBound("recursion-lift", Rational(inner.cycle->length()) + tBound, lifted.length());
    out.cycle = std::move(lifted);
    return out;
  }
  return failure(Branch::ManyShortCircuit, "dense-set growth did not settle");
}

struct Block {
  std::vector<Vertex> vertices;
  PathOracle oracle;
  Rational bound;
};

SearchOutcome fewImpl(const EdgeColoredGraph& g, const Context& ctx, const VertexClassification& cls) {
  const int n = g.vertexCount();
  const int r = ctx.consts.r;
  const std::vector<Vertex>& nonStars = cls.nonStars;
  const int t = static_cast<int>(nonStars.size());

  // Global galaxy: each star vertex with its smallest star class.
  Galaxy m;
  std::vector<ColorId> mColor(n, -1);
  std::vector<std::vector<Vertex>> mLeaves(n);
  ColorMask isM(g.colorCount(), false);
  for (Vertex u : cls.stars) {
    const ColorId c = cls.starClasses[u].front();
    for (EdgeId e : g.classEdges(c)) mLeaves[u].push_back(g.edge(e).other(u));
    std::sort(mLeaves[u].begin(), mLeaves[u].end());
    mColor[u] = c;
    isM[c] = true;
    m.add({u, c, mLeaves[u]});
  }

  SearchOutcome out;
  std::vector<int> block(n, -1);
  std::vector<Block> blocks;
  std::int64_t dSum = 0;

  for (int j = 0; j < t; ++j) {
    PathSet x;
    x.member.assign(n, false);
    x.colors.assign(g.colorCount(), false);
    x.member[nonStars[j]] = true;
    x.vertices = {nonStars[j]};
    x.oracle = [](Vertex a, Vertex) { return trivialPath(a); };
    int xBudget = 0;

    std::shared_ptr<GalaxyPathBuilder> builder;
    PathSet tj;
    for (int round = 0;; ++round) {
      if (round > n) throw std::logic_error("block growth did not settle");
      // Roots whose M-neighbors all lie in earlier blocks, the set, or earlier roots.
      Galaxy local;
      VertexMask inside = x.member;
      for (bool progress = true; progress;) {
        progress = false;
        for (Vertex u : cls.stars) {
          if (inside[u] || block[u] >= 0) continue;
          Star star{u, mColor[u], {}};
          bool all = true;
          for (Vertex leaf : mLeaves[u]) {
            if (inside[leaf]) star.leaves.push_back(leaf);
            else all = all && block[leaf] >= 0;
          }
          if (!all) continue;
          if (star.leaves.empty()) throw std::logic_error("star vertex with every M-neighbor in earlier blocks");
          local.add(std::move(star));
          inside[u] = true;
          progress = true;
        }
      }
      builder = std::make_shared<GalaxyPathBuilder>(g, GalaxyPathQuery{x.vertices, x.colors, xBudget, x.oracle, local, r});
      tj = fromBuilder(g, builder);

      // Outside star vertices with an M-neighbor in the block.
      std::map<Vertex, EdgeId> ys;
      for (Vertex u : cls.stars) {
        if (block[u] >= 0 || tj.member[u]) continue;
        for (Vertex leaf : mLeaves[u]) {
          if (!tj.member[leaf]) continue;
          ys.emplace(u, *g.findEdge(u, leaf, mColor[u]));
          break;
        }
      }
      if (static_cast<int>(ys.size()) < 4 * r) break;
      x = attachPendants(g, tj, ys);
      xBudget = maxPathLength(x);
    }

    for (Vertex v : tj.vertices) block[v] = j;
    std::int64_t s = 0;
    for (Vertex v : tj.vertices) {
      if (mColor[v] < 0) continue;
      if (std::any_of(mLeaves[v].begin(), mLeaves[v].end(), [&](Vertex l) { return block[l] >= 0 && block[l] < j; }))
        ++s;
    }
    dSum += s + 2;
    std::int64_t gamma = 0;
    for (Vertex u : cls.stars) {
      if (block[u] >= 0) continue;
      const bool reaches = std::any_of(mLeaves[u].begin(), mLeaves[u].end(), [&](Vertex l) { return block[l] >= 0; });
      const bool escapes = std::any_of(mLeaves[u].begin(), mLeaves[u].end(), [&](Vertex l) { return block[l] < 0; });
      if (!escapes) throw std::logic_error("star vertex outside the blocks has every M-neighbor inside them");
      if (reaches) ++gamma;
    }
    ++out.blockChecks;
    if (dSum + gamma > static_cast<std::int64_t>(4 * r + 1) * (j + 1)) {
      throw std::logic_error("block-sum inequality failed at block " + std::to_string(j + 1));
    }
    blocks.push_back({tj.vertices, tj.oracle, builder->bound()});
  }

  auto finish = [&](SearchOutcome o) {
    o.blockChecks = out.blockChecks;
    return o;
  };

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (block[v] < 0) rest.push_back(v);

  if (rest.empty()) {
    for (EdgeId e = 0; e < g.edgeCount(); ++e) {
      const Edge& ed = g.edge(e);
      if (isM[ed.color] || block[ed.u] != block[ed.v]) continue;
      const Block& b = blocks[block[ed.u]];
      SearchOutcome o = withCycle(g, closePath(g, b.oracle(ed.u, ed.v), e), Branch::FewShortCircuit);
      o.bound = makeBound("chord", b.bound + 1, o.cycle->length());
      return finish(std::move(o));
    }
    // One edge per non-M color between blocks: t edges on t block vertices.
    UndirectedGraph h{t, {}};
    std::vector<EdgeId> kept;
    for (ColorId c = 0; c < g.colorCount(); ++c) {
      if (isM[c]) continue;
      const EdgeId e = g.classEdges(c).front();
      h.edges.emplace_back(block[g.edge(e).u], block[g.edge(e).v]);
      kept.push_back(e);
    }
    auto w = shortestCycle(h);
    if (!w) throw std::logic_error("block graph is acyclic");
    const int len = static_cast<int>(w->edges.size());
    auto endIn = [&](EdgeId e, int b) {
      const Edge& ed = g.edge(e);
      return block[ed.u] == b ? ed.u : ed.v;
    };
    RainbowPath walk = trivialPath(endIn(kept[w->edges[len - 1]], w->vertices[0]));
    Rational bound = len;
    for (int i = 0; i < len; ++i) {
      const int b = w->vertices[i];
      const EdgeId e = kept[w->edges[i]];
      walk = join(walk, blocks[b].oracle(walk.back(), endIn(e, b)));
      walk = extend(g, walk, e);
      bound += blocks[b].bound;
    }
    SearchOutcome o = withCycle(g, closedWalkToCycle(g, walk), Branch::FewContraction);
    o.bound = makeBound("block-contraction", bound, o.cycle->length());
    return finish(std::move(o));
  }

  GalaxyDigraph gd = galaxyDigraph(rest, m);
  auto dc = shortestDirectedCycle(gd.digraph);
  if (!dc) throw std::logic_error("sink-free digraph without a directed cycle");
  SearchOutcome o = withCycle(g, liftGalaxyCycle(g, gd, m, *dc), Branch::FewDigraph);
  o.bound = makeBound("digraph-girth", galaxyDigraphGirthBound(gd.digraph.vertexCount(), r, digraphDefect(gd.digraph, r)),
                      o.cycle->length());
  return finish(std::move(o));
}

std::optional<std::string> structuralProblem(const EdgeColoredGraph& g, int r) {
  ValidationReport rep = validate(g, ValidationMode::simple());
  if (!rep.ok()) return rep.violations.front().message;
  if (g.colorCount() != g.vertexCount()) return "color count differs from vertex count";
  for (ColorId c = 0; c < g.colorCount(); ++c) {
    if (g.classSize(c) > r) return "class " + g.colorName(c) + " has more than r edges";
  }
  return std::nullopt;
}

SearchOutcome dispatch(const EdgeColoredGraph& g, const Context& ctx, int depth) {
  if (depth > ctx.opts.depthCap) return failure(Branch::ManyRecursion, "recursion depth cap exceeded");
  if (BigInt(g.vertexCount()) <= ctx.consts.alpha) {
    SearchOutcome o = withCycle(g, baseCaseCycle(g), Branch::BaseCase);
    o.bound = makeBound("vertex-count", Rational(g.vertexCount()), o.cycle->length());
    return o;
  }
  VertexClassification cls = classifyVertices(g, true);
  if (BigInt(cls.nonStars.size()) > ctx.consts.f) return manyImpl(g, ctx, depth, cls);
  return fewImpl(g, ctx, cls);
}

Context makeContext(const EdgeColoredGraph& g, const Constants& consts, const SearchOptions& options) {
  Context ctx{consts, options};
  if (ctx.opts.depthCap < 0) ctx.opts.depthCap = g.vertexCount();
  return ctx;
}

}  // namespace

Contraction contractVertexSet(const EdgeColoredGraph& g, const std::vector<Vertex>& set) {
  const int n = g.vertexCount();
  if (set.empty()) throw std::invalid_argument("contractVertexSet: empty set");
  VertexMask in(n, false);
  for (Vertex v : set) {
    if (v < 0 || v >= n) throw std::invalid_argument("contractVertexSet: vertex out of range");
    in[v] = true;
  }
  ColorMask deleted(g.colorCount(), false);
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) deleted[e.color] = true;

  Contraction c;
  std::vector<Vertex> local(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) continue;
    local[v] = static_cast<Vertex>(c.originVertex.size());
    c.originVertex.push_back(v);
  }
  c.hub = static_cast<Vertex>(c.originVertex.size());
  c.originVertex.push_back(-1);
  for (Vertex v : set) local[v] = c.hub;

  std::vector<ColorId> newColor(g.colorCount(), -1);
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::set<std::tuple<Vertex, Vertex, ColorId>> seen;
  for (EdgeId id = 0; id < g.edgeCount(); ++id) {
    const Edge& e = g.edge(id);
    if (deleted[e.color]) continue;
    const Vertex a = std::min(local[e.u], local[e.v]), b = std::max(local[e.u], local[e.v]);
    if (!seen.emplace(a, b, e.color).second) continue;
    if (newColor[e.color] < 0) {
      newColor[e.color] = static_cast<ColorId>(names.size());
      names.push_back(g.colorName(e.color));
    }
    edges.push_back({local[e.u], local[e.v], newColor[e.color]});
    c.originEdge.push_back(id);
  }
  c.graph = EdgeColoredGraph(static_cast<int>(c.originVertex.size()), std::move(edges), std::move(names));
  return c;
}

RainbowCycle liftContractedCycle(const EdgeColoredGraph& g, const Contraction& c, const RainbowCycle& cycle,
                                 const PathOracle& inside) {
  const int len = cycle.length();
  auto pos = std::find(cycle.vertices.begin(), cycle.vertices.end(), c.hub);
  if (pos == cycle.vertices.end()) {
    std::vector<Vertex> vs;
    std::vector<EdgeId> es;
    for (int i = 0; i < len; ++i) {
      vs.push_back(c.originVertex[cycle.vertices[i]]);
      es.push_back(c.originEdge[cycle.edges[i]]);
    }
    return cycleFromEdges(g, vs, es);
  }
  const int h = static_cast<int>(pos - cycle.vertices.begin());
  // Rotated so the hub is first: hub -e0- v1 ... v_{L-1} -e_{L-1}- hub.
  auto edgeAt = [&](int i) { return c.originEdge[cycle.edges[(h + i) % len]]; };
  auto hubEnd = [&](EdgeId e, Vertex outside) { return g.edge(e).other(outside); };
  const EdgeId first = edgeAt(0), last = edgeAt(len - 1);
  const Vertex a = hubEnd(first, c.originVertex[cycle.vertices[(h + 1) % len]]);
  const Vertex b = hubEnd(last, c.originVertex[cycle.vertices[(h + len - 1) % len]]);
  RainbowPath walk = inside(b, a);
  for (int i = 0; i < len; ++i) walk = extend(g, walk, edgeAt(i));
  return closedWalkToCycle(g, walk);
}

SearchOutcome manyNonStarStep(const EdgeColoredGraph& g, const Constants& consts, int depth,
                              const SearchOptions& options) {
  if (auto p = structuralProblem(g, consts.r)) throw std::invalid_argument("manyNonStarStep: " + *p);
  VertexClassification cls = classifyVertices(g, true);
  if (BigInt(cls.nonStars.size()) <= consts.f) throw std::invalid_argument("manyNonStarStep: |N| <= f");
  return manyImpl(g, makeContext(g, consts, options), depth, cls);
}

SearchOutcome fewNonStarStep(const EdgeColoredGraph& g, const Constants& consts, const SearchOptions& options) {
  if (auto p = structuralProblem(g, consts.r)) throw std::invalid_argument("fewNonStarStep: " + *p);
  VertexClassification cls = classifyVertices(g, true);
  if (BigInt(cls.nonStars.size()) > consts.f) throw std::invalid_argument("fewNonStarStep: |N| > f");
  return fewImpl(g, makeContext(g, consts, options), cls);
}

SearchOutcome constructRainbowCycle(const EdgeColoredGraph& g, const Constants& consts,
                                    const SearchOptions& options) {
  ValidationReport rep = validate(g, ValidationMode::bounded(consts.r));
  if (!rep.ok()) throw std::invalid_argument("constructRainbowCycle: " + rep.violations.front().message);
  SearchOutcome out = dispatch(g, makeContext(g, consts, options), 0);
  if (out.found()) {
    if (auto problem = cycleProblem(g, *out.cycle)) throw std::logic_error("search returned invalid cycle: " + *problem);
    if (consts.lengthGuaranteed()) {
      const Rational bound = mainBound(g.vertexCount(), defect(g, consts.r), consts.r, consts.alpha);
      out.guarantee = makeBound("main", bound, out.cycle->length());
    }
  }
  return out;
}

}  // namespace rainbow
