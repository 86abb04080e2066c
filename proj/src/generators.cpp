#include "rainbow/generators.hpp"

#include <algorithm>
#include <set>

#include "rainbow/reduction.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

constexpr int kRejectionCap = 100000;

std::int64_t pairCount(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

}  // namespace

EdgeColoredGraph randomEC(int n, int r, std::uint64_t seed, ClassSizePolicy policy) {
  if (n < 3) throw InfeasibleParameters("randomEC: need n >= 3");
  if (r < 2) throw InfeasibleParameters("randomEC: need r >= 2");
  if (r > pairCount(n)) throw InfeasibleParameters("randomEC: r exceeds the number of vertex pairs");
  SplitMix64 rng(seed);
  std::vector<EdgeColoredGraph::ColorClass> classes;
  int attempts = 0;
  for (int c = 0; c < n; ++c) {
    const int size = policy == ClassSizePolicy::Exact ? r : static_cast<int>(rng.between(2, r));
    std::set<std::pair<Vertex, Vertex>> pairs;
    EdgeColoredGraph::ColorClass cls{std::to_string(c), {}};
    while (static_cast<int>(cls.edges.size()) < size) {
      if (++attempts > kRejectionCap) throw InfeasibleParameters("randomEC: rejection budget exhausted");
      Vertex u = static_cast<Vertex>(rng.below(n)), v = static_cast<Vertex>(rng.below(n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (!pairs.emplace(u, v).second) continue;
      cls.edges.emplace_back(u, v);
    }
    classes.push_back(std::move(cls));
  }
  return EdgeColoredGraph::fromClasses(n, classes);
}

Digraph randomDigraph(int n, int r, std::uint64_t seed) {
  if (r < 1 || r >= n) throw InfeasibleParameters("randomDigraph: need 1 <= r < n");
  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::vector<Vertex> others;
  for (Vertex u = 0; u < n; ++u) {
    others.clear();
    for (Vertex v = 0; v < n; ++v)
      if (v != u) others.push_back(v);
    // Partial Fisher-Yates picks r distinct heads.
    for (int i = 0; i < r; ++i) {
      std::swap(others[i], others[i + rng.below(others.size() - i)]);
      arcs.emplace_back(u, others[i]);
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph randomSimpleDigraph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InfeasibleParameters("randomSimpleDigraph: need n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InfeasibleParameters("randomSimpleDigraph: p outside [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const double draw = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
      if (draw < p) arcs.emplace_back(u, v);
    }
  return Digraph(n, std::move(arcs));
}

Digraph circulantDigraph(int n, int r) {
  if (r < 1 || r >= n) throw InfeasibleParameters("circulant: need 1 <= r < n");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (int j = 1; j <= r; ++j) arcs.emplace_back(i, (i + j) % n);
  return Digraph(n, std::move(arcs));
}

EdgeColoredGraph circulant(int n, int r) { return digraphToColoredGraph(circulantDigraph(n, r)); }

Digraph directedCycle(int n) {
  if (n < 2) throw InfeasibleParameters("directedCycle: need n >= 2");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return Digraph(n, std::move(arcs));
}

Digraph digraphFromMask(int n, std::uint64_t mask) {
  if (n < 1 || n * (n - 1) > 64) throw InfeasibleParameters("digraphFromMask: need 1 <= n and n(n-1) <= 64");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((mask >> bit) & 1U) arcs.emplace_back(u, v);
      ++bit;
    }
  return Digraph(n, std::move(arcs));
}

UndirectedGraph excessK(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < -1) throw InfeasibleParameters("excessK: need n >= 1 and k >= -1");
  if (n + k > pairCount(n)) throw InfeasibleParameters("excessK: more edges than vertex pairs");
  SplitMix64 rng(seed);
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  UndirectedGraph h{n, {}};
  std::set<std::pair<Vertex, Vertex>> used;
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (!used.emplace(u, v).second) return false;
    h.edges.emplace_back(u, v);
    return true;
  };
  for (int i = 1; i < n; ++i) add(order[i], order[rng.below(i)]);
  int attempts = 0;
  while (static_cast<int>(h.edges.size()) < n + k) {
    if (++attempts > kRejectionCap) throw InfeasibleParameters("excessK: rejection budget exhausted");
    Vertex u = static_cast<Vertex>(rng.below(n)), v = static_cast<Vertex>(rng.below(n));
    if (u != v) add(u, v);
  }
  return h;
}

bool producesDigraph(const std::string& family) {
  return family == "randomDigraph" || family == "randomSimpleDigraph" || family == "directedCycle" ||
         family == "exhaustive";
}

bool producesUndirected(const std::string& family) { return family == "excessK"; }

bool knownFamily(const std::string& family) {
  return producesDigraph(family) || producesUndirected(family) || family == "randomEC" || family == "circulant" || family == "chImage";
}

EdgeColoredGraph generateColored(const GenSpec& s) {
  if (s.family == "randomEC") return randomEC(s.n, s.r, s.seed, s.policy);
  if (s.family == "circulant") return circulant(s.n, s.r);
  if (s.family == "chImage") return digraphToColoredGraph(randomDigraph(s.n, s.r, s.seed));
  return digraphToColoredGraph(generateDigraph(s));
}

Digraph generateDigraph(const GenSpec& s) {
  if (s.family == "randomDigraph") return randomDigraph(s.n, s.r, s.seed);
  if (s.family == "randomSimpleDigraph") return randomSimpleDigraph(s.n, s.p, s.seed);
  if (s.family == "directedCycle") return directedCycle(s.n);
  if (s.family == "exhaustive") return digraphFromMask(s.n, s.seed);
  if (s.family == "circulant") return circulantDigraph(s.n, s.r);
  throw std::invalid_argument("family " + s.family + " does not produce a digraph");
}

UndirectedGraph generateUndirected(const GenSpec& s) {
  if (s.family != "excessK") throw std::invalid_argument("family " + s.family + " does not produce an undirected graph");
  return excessK(s.n, s.k, s.seed);
}

std::string serializeUndirected(const UndirectedGraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.n;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : h.edges) j["edges"].push_back({u, v});
  return j.dump();
}

nlohmann::ordered_json toJson(const GenSpec& s) {
  nlohmann::ordered_json j;
  j["family"] = s.family;
  j["n"] = s.n;
  if (s.family == "excessK") j["k"] = s.k;
  else j["r"] = s.r;
  if (s.family == "randomEC") j["policy"] = s.policy == ClassSizePolicy::Exact ? "exact" : "uniform";
  if (s.family == "randomSimpleDigraph") j["p"] = s.p;
  j["seed"] = s.seed;
  return j;
}

GenSpec genSpecFromJson(const nlohmann::json& j) {
  GenSpec s;
  s.family = j.at("family").get<std::string>();
  if (!knownFamily(s.family)) throw std::invalid_argument("unknown family " + s.family);
  s.n = j.at("n").get<int>();
  s.r = j.value("r", 0);
  s.k = j.value("k", 0);
  const std::string policy = j.value("policy", std::string("uniform"));
  if (policy != "uniform" && policy != "exact") throw std::invalid_argument("unknown class-size policy " + policy);
  s.policy = policy == "exact" ? ClassSizePolicy::Exact : ClassSizePolicy::Uniform;
  s.p = j.value("p", 0.5);
  s.seed = j.value("seed", std::uint64_t{0});
  return s;
}

}  // namespace rainbow
