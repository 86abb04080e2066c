#include "rainbow/galaxy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rainbow {

std::optional<int> Galaxy::indexOf(Vertex root) const {
  for (int i = 0; i < size(); ++i) {
    if (stars_[i].root == root) return i;
  }
  return std::nullopt;
}

std::vector<ColorId> Galaxy::colors() const {
  std::vector<ColorId> out;
  for (const Star& s : stars_) out.push_back(s.color);
  return out;
}

std::vector<std::string> galaxyProblems(const EdgeColoredGraph& g, const Galaxy& m) {
  std::vector<std::string> out;
  std::set<Vertex> roots;
  std::set<ColorId> colors;
  for (const Star& s : m.stars()) {
    const std::string at = "star at " + std::to_string(s.root);
    if (s.root < 0 || s.root >= g.vertexCount()) {
      out.push_back(at + ": root out of range");
      continue;
    }
    if (!roots.insert(s.root).second) out.push_back(at + ": repeated root");
    if (s.color < 0 || s.color >= g.colorCount()) {
      out.push_back(at + ": color out of range");
      continue;
    }
    if (!colors.insert(s.color).second) out.push_back(at + ": repeated color " + g.colorName(s.color));
    if (s.leaves.empty()) out.push_back(at + ": no edges");
    std::set<Vertex> leaves;
    for (Vertex l : s.leaves) {
      if (!leaves.insert(l).second) out.push_back(at + ": repeated leaf " + std::to_string(l));
      if (!g.findEdge(s.root, l, s.color)) {
        out.push_back(at + ": no edge to " + std::to_string(l) + " of color " + g.colorName(s.color));
      }
    }
  }
  return out;
}

Rational galaxyPathBound(const Galaxy& m, int r, int x) {
  BigInt numerator = m.size();
  for (const Star& s : m.stars()) numerator += r - static_cast<int>(s.leaves.size());
  return Rational(numerator, BigInt(r)) + x + 2;
}

GalaxyPathBuilder::GalaxyPathBuilder(const EdgeColoredGraph& g, GalaxyPathQuery q) : g_(g), q_(std::move(q)) {
  const int n = g_.vertexCount();
  std::vector<std::string> problems = galaxyProblems(g_, q_.galaxy);
  if (q_.r < 1) problems.push_back("r must be positive");
  if (static_cast<int>(q_.xColors.size()) != g_.colorCount()) problems.push_back("color mask size mismatch");
  if (q_.x.empty()) problems.push_back("X is empty");
  if (!q_.xOracle) problems.push_back("missing X oracle");
  if (!problems.empty()) throw std::invalid_argument("galaxy query: " + problems.front());

  inX_.assign(n, false);
  inR_.assign(n, false);
  rootIndex_.assign(n, -1);
  for (Vertex v : q_.x) {
    if (v < 0 || v >= n) throw std::invalid_argument("galaxy query: X vertex out of range");
    inX_[v] = inR_[v] = true;
  }
  const int m = q_.galaxy.size();
  for (int i = 0; i < m; ++i) {
    Vertex u = q_.galaxy[i].root;
    if (inX_[u]) throw std::invalid_argument("galaxy query: root " + std::to_string(u) + " lies in X");
    rootIndex_[u] = i;
    inR_[u] = true;
  }

  // Leaves of the i-th star lie in X or among u_1..u_{i-1}.
  next_.assign(m, -1);
  rootLeaves_.assign(m, {});
  for (int i = 0; i < m; ++i) {
    const Star& s = q_.galaxy[i];
    Vertex bestX = -1;
    for (Vertex l : s.leaves) {
      if (inX_[l]) {
        if (bestX < 0 || l < bestX) bestX = l;
      } else if (rootIndex_[l] >= 0 && rootIndex_[l] < i) {
        rootLeaves_[i].push_back(rootIndex_[l]);
      } else {
        throw std::invalid_argument("galaxy query: leaf " + std::to_string(l) + " of root " + std::to_string(s.root) +
                                    " is neither in X nor an earlier root");
      }
    }
    std::sort(rootLeaves_[i].begin(), rootLeaves_[i].end());
    next_[i] = bestX >= 0 ? bestX : q_.galaxy[rootLeaves_[i].front()].root;
    if (static_cast<int>(s.leaves.size()) > q_.r) {
      throw std::invalid_argument("galaxy query: star at " + std::to_string(s.root) + " has more than r edges");
    }
  }

  // X colors: disjoint from the galaxy colors and present inside G[X].
  allowed_ = q_.xColors;
  for (const Star& s : q_.galaxy.stars()) {
    if (q_.xColors[s.color]) {
      throw std::invalid_argument("galaxy query: color " + g_.colorName(s.color) + " is both an X color and a star color");
    }
    allowed_[s.color] = true;
  }
  ColorMask inside(g_.colorCount(), false);
  for (const Edge& e : g_.edges()) {
    if (inX_[e.u] && inX_[e.v]) inside[e.color] = true;
  }
  for (ColorId c = 0; c < g_.colorCount(); ++c) {
    if (q_.xColors[c] && !inside[c]) {
      throw std::invalid_argument("galaxy query: X color " + g_.colorName(c) + " does not appear inside G[X]");
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (inR_[v]) members_.push_back(v);
  }
  bound_ = galaxyPathBound(q_.galaxy, q_.r, q_.xBudget);
}

std::vector<Vertex> GalaxyPathBuilder::chain(Vertex u) const {
  std::vector<Vertex> out{u};
  while (!inX_[out.back()]) out.push_back(next_[rootIndex_[out.back()]]);
  return out;
}

EdgeId GalaxyPathBuilder::starEdge(int rootIndex, Vertex leaf) const {
  const Star& s = q_.galaxy[rootIndex];
  auto e = g_.findEdge(s.root, leaf, s.color);
  if (!e) throw std::logic_error("galaxy star edge vanished");
  return *e;
}

// The prefix chain[0..stop] as a path.
RainbowPath GalaxyPathBuilder::walk(const std::vector<Vertex>& chain, std::size_t stop) const {
  RainbowPath p = trivialPath(chain[0]);
  for (std::size_t i = 0; i < stop; ++i) p = extend(g_, std::move(p), starEdge(rootIndex_[chain[i]], chain[i + 1]));
  return p;
}

RainbowPath GalaxyPathBuilder::checkedOracle(Vertex a, Vertex b) const {
  RainbowPath p = q_.xOracle(a, b);
  if (p.vertices.empty() || p.front() != a || p.back() != b) {
    throw std::invalid_argument("galaxy query: X oracle returned a path with wrong ends");
  }
  if (auto problem = pathProblem(g_, p)) throw std::invalid_argument("galaxy query: X oracle path invalid: " + *problem);
  if (p.length() > q_.xBudget) throw std::invalid_argument("galaxy query: X oracle path longer than x");
  for (Vertex w : p.vertices) {
    if (!inX_[w]) throw std::invalid_argument("galaxy query: X oracle path leaves X");
  }
  for (ColorId c : p.colors) {
    if (!q_.xColors[c]) throw std::invalid_argument("galaxy query: X oracle path uses a color outside C_X");
  }
  return p;
}

RainbowPath GalaxyPathBuilder::path(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) throw std::invalid_argument("galaxy path: endpoint outside R");
  if (u == v) return trivialPath(u);

  const std::vector<Vertex> pu = chain(u);
  const std::vector<Vertex> pv = chain(v);

  // Roots a on P^u and b on P^v, a != b, sharing a root leaf; maximise a + b.
  int bestSum = -1;
  std::size_t bestA = 0, bestB = 0;
  int bestLeaf = -1;
  for (std::size_t i = 0; i + 1 < pu.size(); ++i) {
    const int a = rootIndex_[pu[i]];
    for (std::size_t j = 0; j + 1 < pv.size(); ++j) {
      const int b = rootIndex_[pv[j]];
      if (a == b || a + b <= bestSum) continue;
      const auto& la = rootLeaves_[a];
      const auto& lb = rootLeaves_[b];
      auto ia = la.begin();
      auto ib = lb.begin();
      while (ia != la.end() && ib != lb.end()) {
        if (*ia == *ib) break;
        (*ia < *ib) ? ++ia : ++ib;
      }
      if (ia == la.end() || ib == lb.end()) continue;
      bestSum = a + b;
      bestA = i;
      bestB = j;
      bestLeaf = *ia;
    }
  }

  RainbowPath result;
  if (bestSum >= 0) {
    const Vertex hub = q_.galaxy[bestLeaf].root;
    RainbowPath left = walk(pu, bestA);
    left = extend(g_, std::move(left), starEdge(rootIndex_[pu[bestA]], hub));
    RainbowPath right = walk(pv, bestB);
    right = extend(g_, std::move(right), starEdge(rootIndex_[pv[bestB]], hub));
    result = join(std::move(left), reversed(std::move(right)));
  } else {
    std::optional<std::pair<std::size_t, std::size_t>> meet;
    for (std::size_t i = 0; i < pu.size() && !meet; ++i) {
      auto it = std::find(pv.begin(), pv.end(), pu[i]);
      if (it != pv.end()) meet = {i, static_cast<std::size_t>(it - pv.begin())};
    }
    if (meet) {
      result = join(walk(pu, meet->first), reversed(walk(pv, meet->second)));
    } else {
      RainbowPath left = walk(pu, pu.size() - 1);
      RainbowPath right = walk(pv, pv.size() - 1);
      RainbowPath middle = checkedOracle(pu.back(), pv.back());
      result = join(join(std::move(left), middle), reversed(std::move(right)));
    }
  }

  if (auto problem = pathProblem(g_, result)) throw std::logic_error("galaxy path is not a rainbow path: " + *problem);
  for (Vertex w : result.vertices) {
    if (!inR_[w]) throw std::logic_error("galaxy path leaves R");
  }
  for (ColorId c : result.colors) {
    if (!allowed_[c]) throw std::logic_error("galaxy path uses a foreign color");
  }
  if (Rational(result.length()) > bound_) {
    throw std::logic_error("galaxy path of length " + std::to_string(result.length()) + " exceeds " + toString(bound_));
  }
  return result;
}

RainbowPath galaxyPath(const EdgeColoredGraph& g, const GalaxyPathQuery& q, Vertex u, Vertex v) {
  return GalaxyPathBuilder(g, q).path(u, v);
}

}  // namespace rainbow
