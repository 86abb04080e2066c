#include "rainbow/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

namespace {

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void rejectUnknownKeys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be a JSON object");
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || k == a;
    if (!known) throw ParseError("unknown key '" + k + "' in " + what);
  }
}

int vertexCount(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer 'n'");
  auto n = j["n"].get<long long>();
  if (n < 0 || n > (1 << 20)) throw ParseError("'n' out of range");
  return static_cast<int>(n);
}

std::pair<Vertex, Vertex> endpoints(const Json& pair, int n, const std::string& what) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
    throw ParseError(what + " must be a pair of integers");
  }
  auto u = pair[0].get<long long>();
  auto v = pair[1].get<long long>();
  for (auto w : {u, v}) {
    if (w < 0 || w >= n) {
      throw ParseError("vertex id " + std::to_string(w) + " outside [0, " + std::to_string(n) + ")");
    }
  }
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

EdgeColoredGraph parseGraph(const std::string& text) {
  Json j = parseJson(text);
  rejectUnknownKeys(j, {"n", "classes"}, "graph");
  const int n = vertexCount(j);
  if (!j.contains("classes") || !j["classes"].is_array()) throw ParseError("missing array 'classes'");
  std::vector<EdgeColoredGraph::ColorClass> classes;
  std::set<std::string> seen;
  for (const auto& cls : j["classes"]) {
    rejectUnknownKeys(cls, {"color", "edges"}, "class");
    if (!cls.contains("color") || !cls["color"].is_string()) throw ParseError("class without string 'color'");
    if (!cls.contains("edges") || !cls["edges"].is_array()) throw ParseError("class without array 'edges'");
    auto name = cls["color"].get<std::string>();
    if (!seen.insert(name).second) throw ParseError("duplicate class '" + name + "'");
    if (cls["edges"].empty()) throw ParseError("class '" + name + "' has no edges");
    EdgeColoredGraph::ColorClass out{name, {}};
    for (const auto& e : cls["edges"]) out.edges.push_back(endpoints(e, n, "edge"));
    classes.push_back(std::move(out));
  }
  return EdgeColoredGraph::fromClasses(n, classes);
}

std::string serializeGraph(const EdgeColoredGraph& g) {
  Json classes = Json::array();
  for (ColorId c = 0; c < g.colorCount(); ++c) {
    Json edges = Json::array();
    for (EdgeId e : g.classEdges(c)) edges.push_back({g.edge(e).u, g.edge(e).v});
    classes.push_back(Json{{"color", g.colorName(c)}, {"edges", std::move(edges)}});
  }
  Json j{{"n", g.vertexCount()}, {"classes", std::move(classes)}};
  return j.dump();
}

Digraph parseDigraph(const std::string& text) {
  Json j = parseJson(text);
  rejectUnknownKeys(j, {"n", "arcs"}, "digraph");
  const int n = vertexCount(j);
  if (!j.contains("arcs") || !j["arcs"].is_array()) throw ParseError("missing array 'arcs'");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (const auto& a : j["arcs"]) arcs.push_back(endpoints(a, n, "arc"));
  try {
    return Digraph(n, std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serializeDigraph(const Digraph& d) {
  Json arcs = Json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  Json j{{"n", d.vertexCount()}, {"arcs", std::move(arcs)}};
  return j.dump();
}

EdgeColoredGraph readGraphFile(const std::string& path) { return parseGraph(readFile(path)); }

Digraph readDigraphFile(const std::string& path) { return parseDigraph(readFile(path)); }

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string instanceHash(const std::string& canonicalText) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : canonicalText) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rainbow
