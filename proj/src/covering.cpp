#include "rainbow/covering.hpp"

#include <algorithm>
#include <stdexcept>

#include "rainbow/bounds.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

bool forEachCombination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool covers(const std::vector<std::pair<Vertex, Vertex>>& classEdges, const VertexMask& set) {
  return std::all_of(classEdges.begin(), classEdges.end(), [&](const auto& e) { return set[e.first] || set[e.second]; });
}

std::int64_t countCoveringSets(const std::vector<std::pair<Vertex, Vertex>>& classEdges,
                               const std::vector<Vertex>& nonStars, int k) {
  if (nonStars.size() > 20) throw std::invalid_argument("countCoveringSets: |N| > 20");
  Vertex top = 0;
  for (const auto& [u, v] : classEdges) top = std::max({top, u, v});
  for (Vertex v : nonStars) top = std::max(top, v);
  VertexMask mask(top + 1, false);
  std::int64_t count = 0;
  forEachCombination(static_cast<int>(nonStars.size()), k, [&](const std::vector<int>& idx) {
    for (int i : idx) mask[nonStars[i]] = true;
    if (covers(classEdges, mask)) ++count;
    for (int i : idx) mask[nonStars[i]] = false;
    return false;
  });
  return count;
}

std::optional<std::vector<Vertex>> findUncoveringSet(const EdgeColoredGraph& g, const std::vector<Vertex>& nonStars,
                                                     int k, const UncoveringOptions& options) {
  const int size = static_cast<int>(nonStars.size());
  if (k < 0 || k > size) return std::nullopt;

  // Only classes with every edge touching N can ever be covered.
  VertexMask inN(g.vertexCount(), false);
  for (Vertex v : nonStars) inN[v] = true;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> candidates;
  for (ColorId c = 0; c < g.colorCount(); ++c) {
    std::vector<std::pair<Vertex, Vertex>> es;
    bool coverable = true;
    for (EdgeId e : g.classEdges(c)) {
      const Edge& ed = g.edge(e);
      coverable = coverable && (inN[ed.u] || inN[ed.v]);
      es.emplace_back(ed.u, ed.v);
    }
    if (coverable) candidates.push_back(std::move(es));
  }

  VertexMask mask(g.vertexCount(), false);
  auto coversNothing = [&](const std::vector<int>& idx) {
    for (int i : idx) mask[nonStars[i]] = true;
    bool ok = std::none_of(candidates.begin(), candidates.end(), [&](const auto& es) { return covers(es, mask); });
    for (int i : idx) mask[nonStars[i]] = false;
    return ok;
  };
  auto result = [&](const std::vector<int>& idx) {
    std::vector<Vertex> out;
    for (int i : idx) out.push_back(nonStars[i]);
    std::sort(out.begin(), out.end());
    return out;
  };

  SplitMix64 rng(options.seed);
  std::vector<int> pool(size);
  for (int s = 0; s < options.samples; ++s) {
    for (int i = 0; i < size; ++i) pool[i] = i;
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + static_cast<int>(rng.below(size - i))]);
    std::vector<int> idx(pool.begin(), pool.begin() + k);
    if (coversNothing(idx)) return result(idx);
  }

  if (binomial(size, k) > options.enumerationCap) return std::nullopt;
  std::optional<std::vector<Vertex>> found;
  forEachCombination(size, k, [&](const std::vector<int>& idx) {
    if (!coversNothing(idx)) return false;
    found = result(idx);
    return true;
  });
  return found;
}

}  // namespace rainbow
