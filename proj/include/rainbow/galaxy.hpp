#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

/// A monochromatic star of G centred at `root`.
struct Star {
  Vertex root;
  ColorId color;
  std::vector<Vertex> leaves;
};

/// Stars with pairwise distinct roots and colors, kept in root order
/// u_1, ..., u_m. The leaves of a root are its M-neighbors.
class Galaxy {
 public:
  Galaxy() = default;
  explicit Galaxy(std::vector<Star> stars) : stars_(std::move(stars)) {}

  int size() const { return static_cast<int>(stars_.size()); }
  const Star& operator[](int i) const { return stars_[i]; }
  const std::vector<Star>& stars() const { return stars_; }
  void add(Star s) { stars_.push_back(std::move(s)); }

  std::optional<int> indexOf(Vertex root) const;
  std::vector<ColorId> colors() const;

 private:
  std::vector<Star> stars_;
};

/// Every leaf edge exists in G with the star's color, every star has a
/// leaf, roots and colors are pairwise distinct. Returns the problems found.
std::vector<std::string> galaxyProblems(const EdgeColoredGraph& g, const Galaxy& m);

/// Supplies, for any two vertices of a set, a rainbow path between them.
using PathOracle = std::function<RainbowPath(Vertex, Vertex)>;

/// Inputs of the galaxy path construction:
///  - the leaves of the i-th star lie in X or among earlier roots,
///  - xColors is disjoint from the galaxy colors and appears inside G[X],
///  - xOracle connects any two vertices of X inside G[X] by a rainbow path
///    over xColors of length at most xBudget.
struct GalaxyPathQuery {
  std::vector<Vertex> x;
  ColorMask xColors;
  int xBudget = 0;
  PathOracle xOracle;
  Galaxy galaxy;
  int r = 2;
};

/// Rainbow paths inside G[X ∪ roots] over xColors ∪ C(M) whose length is
/// at most (m + sum_i (r - |u_i|_M)) / r + x + 2.
///
/// The query is validated once on construction (std::invalid_argument on a
/// broken hypothesis); each `path` call re-checks the oracle output it
/// consumes and the path it returns.
class GalaxyPathBuilder {
 public:
  GalaxyPathBuilder(const EdgeColoredGraph& g, GalaxyPathQuery q);

  RainbowPath path(Vertex u, Vertex v) const;

  Rational bound() const { return bound_; }
  const std::vector<Vertex>& vertices() const { return members_; }  // R, ascending
  bool contains(Vertex v) const { return v >= 0 && v < static_cast<int>(inR_.size()) && inR_[v]; }
  const GalaxyPathQuery& query() const { return q_; }

 private:
  std::vector<Vertex> chain(Vertex u) const;
  EdgeId starEdge(int rootIndex, Vertex leaf) const;
  RainbowPath walk(const std::vector<Vertex>& chain, std::size_t stop) const;
  RainbowPath checkedOracle(Vertex a, Vertex b) const;

  const EdgeColoredGraph& g_;
  GalaxyPathQuery q_;
  std::vector<bool> inX_;
  std::vector<bool> inR_;
  std::vector<int> rootIndex_;                  // -1 when not a root
  std::vector<int> next_;                       // p(u) for roots
  std::vector<std::vector<int>> rootLeaves_;    // leaf roots, as sorted indices
  std::vector<Vertex> members_;
  ColorMask allowed_;
  Rational bound_;
};

/// One-shot form of GalaxyPathBuilder::path.
RainbowPath galaxyPath(const EdgeColoredGraph& g, const GalaxyPathQuery& q, Vertex u, Vertex v);

/// (m + sum_i (r - |u_i|_M)) / r + x + 2.
Rational galaxyPathBound(const Galaxy& m, int r, int x);

}  // namespace rainbow
