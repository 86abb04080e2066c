#pragma once

#include <vector>

#include "rainbow/galaxy.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

/// Each arc (u, v) becomes an edge uv colored "u". The class of color u has
/// deg+(u) edges and the result is simple because the digraph is. Vertices
/// with no out-arcs contribute no color.
EdgeColoredGraph digraphToColoredGraph(const Digraph& d);

/// Rainbow cycle of digraphToColoredGraph(d) -> directed cycle of d, as the
/// vertex sequence v_0 -> v_1 -> ... -> v_0. Throws if the cycle is not
/// consistently oriented (impossible for a rainbow cycle of the image).
std::vector<Vertex> orientRainbowCycle(const EdgeColoredGraph& image, const RainbowCycle& c);

/// Digraph on W with an arc v -> u whenever u in W is an M-neighbor of v.
struct GalaxyDigraph {
  Digraph digraph;
  std::vector<Vertex> vertices;  // digraph vertex i is G vertex vertices[i]
};

/// Throws std::invalid_argument when some vertex of W is not a root of M or
/// has no M-neighbor inside W (it would be a sink).
GalaxyDigraph galaxyDigraph(const std::vector<Vertex>& w, const Galaxy& m);

/// The star edges along a directed cycle of galaxyDigraph form a rainbow
/// cycle of G of the same length.
RainbowCycle liftGalaxyCycle(const EdgeColoredGraph& g, const GalaxyDigraph& d, const Galaxy& m,
                             const std::vector<Vertex>& directedCycle);

}  // namespace rainbow
