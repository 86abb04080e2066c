#pragma once

#include <stdexcept>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-colored graph text:
//   {"n": <int>, "classes": [{"color": "<name>", "edges": [[u,v], ...]}, ...]}
// Digraph text:
//   {"n": <int>, "arcs": [[u,v], ...]}
// Unknown keys are rejected. Serialization is compact and keeps class and
// edge order, so serialize(parse(s)) == s for text produced by serialize.

EdgeColoredGraph parseGraph(const std::string& text);
std::string serializeGraph(const EdgeColoredGraph& g);

Digraph parseDigraph(const std::string& text);
std::string serializeDigraph(const Digraph& d);

EdgeColoredGraph readGraphFile(const std::string& path);
Digraph readDigraphFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);

/// FNV-1a over the canonical serialization, as 16 hex digits.
std::string instanceHash(const std::string& canonicalText);

}  // namespace rainbow
