#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

/// Calls `visit` with every k-subset of {0..n-1} in lexicographic order;
/// stops early when `visit` returns true. Returns whether it stopped early.
bool forEachCombination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit);

/// A set covers a class when every edge of the class has an end in it.
bool covers(const std::vector<std::pair<Vertex, Vertex>>& classEdges, const VertexMask& set);

/// Number of k-subsets of `nonStars` covering the class, by enumeration.
/// Throws std::invalid_argument if |nonStars| > 20.
std::int64_t countCoveringSets(const std::vector<std::pair<Vertex, Vertex>>& classEdges,
                               const std::vector<Vertex>& nonStars, int k);

struct UncoveringOptions {
  std::uint64_t seed = 1;
  int samples = 2000;                        // random k-subsets tried first
  std::int64_t enumerationCap = 200000;      // enumerate when C(|N|, k) <= cap
};

/// A k-subset of `nonStars` covering no color class of g, if one is found.
std::optional<std::vector<Vertex>> findUncoveringSet(const EdgeColoredGraph& g, const std::vector<Vertex>& nonStars,
                                                     int k, const UncoveringOptions& options = {});

}  // namespace rainbow
