#pragma once

#include <cstdint>
#include <string>

#include <stdexcept>

#include "json.hpp"

#include "rainbow/graph.hpp"

namespace rainbow {

/// Thrown when parameters leave no room for an instance or the rejection
/// budget (1e5 attempts) runs out.
struct InfeasibleParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ClassSizePolicy { Uniform, Exact };  // sizes uniform in [2, r], or exactly r

/// n classes on n vertices, each a set of distinct vertex pairs; classes may
/// share pairs (parallel edges of distinct colors). Requires n >= 3 and
/// 2 <= r <= n(n-1)/2.
EdgeColoredGraph randomEC(int n, int r, std::uint64_t seed, ClassSizePolicy policy = ClassSizePolicy::Uniform);

/// Simple digraph where every vertex has out-degree exactly r (1 <= r < n).
Digraph randomDigraph(int n, int r, std::uint64_t seed);

/// Simple digraph with each ordered pair an arc independently with probability p.
Digraph randomSimpleDigraph(int n, double p, std::uint64_t seed);

/// Arcs i -> i+1, ..., i+r (mod n). Requires 1 <= r < n.
Digraph circulantDigraph(int n, int r);

/// Arc-colored image of circulantDigraph: class i is the star at i with
/// leaves i+1, ..., i+r.
EdgeColoredGraph circulant(int n, int r);

Digraph directedCycle(int n);

/// Arc set given by the bits of `mask` over the ordered pairs (u, v), u != v,
/// in lexicographic order. Requires n(n - 1) <= 64.
Digraph digraphFromMask(int n, std::uint64_t mask);

/// Connected simple graph with n + k edges (random spanning tree plus random
/// extra edges). Requires n >= 1, k >= -1 and n + k <= n(n-1)/2.
UndirectedGraph excessK(int n, int k, std::uint64_t seed);

struct GenSpec {
  std::string family;  // randomEC | randomDigraph | randomSimpleDigraph | circulant | directedCycle | chImage | excessK | exhaustive (arc mask in seed)
  int n = 0;
  int r = 0;
  int k = 0;  // excessK only
  ClassSizePolicy policy = ClassSizePolicy::Uniform;
  double p = 0.5;  // randomSimpleDigraph only
  std::uint64_t seed = 0;
};

bool producesDigraph(const std::string& family);
bool producesUndirected(const std::string& family);
bool knownFamily(const std::string& family);

/// Colored families directly; digraph families through their arc coloring.
EdgeColoredGraph generateColored(const GenSpec& spec);
/// Digraph families only; throws std::invalid_argument otherwise.
Digraph generateDigraph(const GenSpec& spec);
/// excessK only.
UndirectedGraph generateUndirected(const GenSpec& spec);
/// {"n": n, "edges": [[u,v], ...]}, compact.
std::string serializeUndirected(const UndirectedGraph& h);

nlohmann::ordered_json toJson(const GenSpec& spec);
GenSpec genSpecFromJson(const nlohmann::json& j);

}  // namespace rainbow
