#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/bounds.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace rainbow;

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected A..B");
  }
}

std::string readText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json colorNames(const EdgeColoredGraph& g, const std::vector<ColorId>& colors) {
  ordered_json out = ordered_json::array();
  for (ColorId c : colors) out.push_back(g.colorName(c));
  return out;
}

ordered_json cycleJson(const EdgeColoredGraph& g, const RainbowCycle& c) {
  return {{"length", c.length()}, {"vertices", c.vertices}, {"colors", colorNames(g, c.colors)}};
}

ordered_json boundJson(const std::optional<BranchBound>& b) {
  if (!b) return nullptr;
  return {{"name", b->name}, {"value", b->value}, {"exact", b->exact}, {"satisfied", b->satisfied}};
}

int runValidate(const std::string& file, const std::string& mode, int r) {
  const EdgeColoredGraph g = readGraphFile(file);
  ValidationMode m = ValidationMode::simple();
  if (mode == "bounded") m = ValidationMode::bounded(r);
  else if (mode == "large") m = ValidationMode::large(r);
  else if (mode != "simple") throw UsageError("unknown mode " + mode);
  const ValidationReport rep = validate(g, m);
  ordered_json out;
  out["ok"] = rep.ok();
  out["violations"] = ordered_json::array();
  for (const auto& v : rep.violations) {
    out["violations"].push_back(
        {{"rule", v.rule}, {"message", v.message}, {"edges", v.edges}, {"colors", colorNames(g, v.colors)}});
  }
  std::cout << out.dump() << "\n";
  return rep.ok() ? 0 : 1;
}

int runOracle(const std::string& kind, const std::string& file, std::optional<int> maxLen) {
  ordered_json out;
  if (kind == "shortest-rainbow-cycle") {
    const EdgeColoredGraph g = readGraphFile(file);
    auto c = shortestRainbowCycle(g, maxLen);
    out["found"] = c.has_value();
    if (c) out.update(cycleJson(g, *c));
  } else if (kind == "girth") {
    // Accepts {"n", "edges"} text or an edge-colored graph (its underlying multigraph).
    const std::string text = readText(file);
    UndirectedGraph h;
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_object() && j.contains("edges")) {
      h.n = j.at("n").get<int>();
      for (const auto& e : j.at("edges")) {
        const Vertex u = e.at(0).get<int>(), v = e.at(1).get<int>();
        if (u < 0 || v < 0 || u >= h.n || v >= h.n) throw ParseError("vertex id outside [0, n)");
        h.edges.emplace_back(u, v);
      }
    } else {
      h = parseGraph(text).underlying();
    }
    auto w = shortestCycle(h);
    out["found"] = w.has_value();
    if (w) out.update({{"length", w->edges.size()}, {"vertices", w->vertices}});
  } else if (kind == "directed-girth") {
    const Digraph d = readDigraphFile(file);
    auto c = shortestDirectedCycle(d);
    out["found"] = c.has_value();
    if (c) out.update({{"length", c->size()}, {"vertices", *c}});
  } else {
    throw UsageError("unknown oracle " + kind);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int runConstruct(const std::string& file, int r, const std::string& preset, std::int64_t k, std::int64_t f,
                 std::uint64_t seed) {
  const EdgeColoredGraph g = readGraphFile(file);
  Constants consts;
  if (preset == "paper") consts = Constants::paper(r);
  else if (preset == "toy") consts = Constants::toy(r, k, f);
  else throw UsageError("preset must be paper or toy");
  const ValidationReport rep = validate(g, ValidationMode::bounded(r));
  if (!rep.ok()) {
    std::cerr << "validation failed: " << rep.violations.front().rule << ": " << rep.violations.front().message << "\n";
    return 1;
  }
  SearchOptions opts;
  opts.seed = seed;
  const SearchOutcome out = constructRainbowCycle(g, consts, opts);
  ordered_json j;
  j["branch"] = branchName(out.branch);
  ordered_json trail = ordered_json::array();
  for (Branch b : out.trail) trail.push_back(branchName(b));
  j["trail"] = trail;
  if (out.found()) {
    if (auto problem = cycleProblem(g, *out.cycle)) throw std::logic_error("invalid cycle: " + *problem);
    j["cycle"] = cycleJson(g, *out.cycle);
  } else {
    j["cycle"] = nullptr;
  }
  j["boundChecked"] = out.guarantee ? ordered_json(out.guarantee->value)
                                    : out.bound ? ordered_json(out.bound->value) : ordered_json();
  j["branchBound"] = boundJson(out.bound);
  j["guarantee"] = boundJson(out.guarantee);
  j["blockChecks"] = out.blockChecks;
  j["constants"] = {{"preset", preset}, {"r", consts.r}, {"k", toString(consts.k)}, {"f", toString(consts.f)},
                    {"alpha", toString(consts.alpha)}};
  if (!out.diagnostics.empty()) j["diagnostics"] = out.diagnostics;
  std::cout << j.dump() << "\n";
  return out.found() ? 0 : 1;
}

int runBounds(const std::string& range) {
  const auto [lo, hi] = parseRange(range);
  if (lo < 2 || hi < lo) throw UsageError("r-range must satisfy 2 <= A <= B");
  bool allOk = true;
  for (int r = lo; r <= hi; ++r) {
    const Constants c = Constants::paper(r);
    ordered_json row;
    row["r"] = r;
    row["k"] = toString(c.k);
    row["f"] = toString(c.f);
    row["alpha"] = toString(c.alpha);
    row["envelope"] = toString(alphaEnvelope(r));
    ordered_json checks = ordered_json::object();
    for (const auto& rep : inequalityChecks(r)) {
      const bool ok = rep.satisfied.value_or(false);
      allOk = allOk && ok;
      checks[rep.name] = {{"value", rep.value}, {"ok", ok}};
    }
    row["checks"] = checks;
    std::cout << row.dump() << "\n";
  }
  return allOk ? 0 : 1;
}

void applyConfig(const std::string& path, VerifyConfig& cfg) {
  const auto j = nlohmann::json::parse(readText(path), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ParseError("config is not a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "family") cfg.family = value.get<std::string>();
    else if (key == "nRange") std::tie(cfg.nMin, cfg.nMax) = parseRange(value.get<std::string>());
    else if (key == "r") cfg.r = value.get<int>();
    else if (key == "k") cfg.k = value.get<int>();
    else if (key == "f") cfg.f = value.get<std::int64_t>();
    else if (key == "preset") cfg.preset = value.get<std::string>();
    else if (key == "samples") cfg.samples = value.get<int>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "parallel") cfg.parallel = value.get<int>();
    else throw ParseError("unknown config key " + key);
  }
}

int runVerifyCommand(VerifyConfig cfg, const std::string& outDir, const std::string& command) {
  if (cfg.family.empty()) cfg.family = defaultFamily(cfg.statement);
  checkConfig(cfg);
  std::ofstream rowsFile;
  fs::path dir;
  if (!outDir.empty()) {
    dir = outDir;
    fs::create_directories(dir / "counterexamples");
    ordered_json manifest;
    manifest["command"] = command;
    manifest["config"] = {{"statement", cfg.statement}, {"family", cfg.family},
                          {"nRange", std::to_string(cfg.nMin) + ".." + std::to_string(cfg.nMax)},
                          {"r", cfg.r}, {"k", cfg.k}, {"f", cfg.f}, {"preset", cfg.preset},
                          {"samples", cfg.samples}, {"parallel", cfg.parallel}};
    manifest["seed"] = cfg.seed;
    manifest["versions"] = {{"rainbow", "0.1.0"}, {"compiler", __VERSION__}};
    writeTextFile((dir / "manifest.json").string(), manifest.dump(2) + "\n");
    rowsFile.open(dir / "rows.jsonl");
  }
  const VerifySummary summary = runVerify(cfg, [&](const VerifyRow& row) {
    const std::string line = toJson(row).dump();
    std::cout << line << "\n";
    if (!rowsFile.is_open()) return;
    rowsFile << line << "\n";
    if (row.verdict == Verdict::Violated || row.verdict == Verdict::ConjecturalViolation) {
      ordered_json cx;
      cx["row"] = toJson(row);
      cx["instance"] = nlohmann::ordered_json::parse(row.instanceText);
      writeTextFile((dir / "counterexamples" / ("row-" + std::to_string(row.index) + ".json")).string(),
                    cx.dump(2) + "\n");
    }
  });
  const std::string summaryLine = toJson(summary).dump();
  std::cout << summaryLine << "\n";
  if (!dir.empty()) writeTextFile((dir / "summary.json").string(), summaryLine + "\n");
  return summary.exitCode();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short rainbow cycles in edge-colored multigraphs: oracles, bounds, constructive search, sweeps"};
  app.require_subcommand(1);

  std::string file, mode = "simple", oracleKind, statement, rRange, outDir, configPath, family, nRange, preset = "paper";
  int r = 2, samples = 100, parallel = 1;
  std::int64_t k = 0, f = 0;
  std::uint64_t seed = 1;
  std::optional<int> maxLen;

  auto* validateCmd = app.add_subcommand("validate", "Check an edge-colored graph file against a hypothesis set");
  validateCmd->add_option("file", file)->required();
  validateCmd->add_option("--mode", mode, "simple | bounded | large")->capture_default_str();
  validateCmd->add_option("--r", r)->capture_default_str();

  auto* oracleCmd = app.add_subcommand("oracle", "Exact brute-force oracles");
  oracleCmd->add_option("kind", oracleKind, "shortest-rainbow-cycle | girth | directed-girth")->required();
  oracleCmd->add_option("file", file)->required();
  oracleCmd->add_option("--max-len", maxLen);

  auto* verifyCmd = app.add_subcommand("verify", "Check a statement over a seeded instance family");
  verifyCmd->add_option("statement", statement, "aharoni | ch | devos | clinch | main | shen | bs-girth")->required();
  auto* familyOpt = verifyCmd->add_option("--family", family);
  auto* nRangeOpt = verifyCmd->add_option("--n-range", nRange, "A..B");
  auto* rOpt = verifyCmd->add_option("--r", r);
  auto* kOpt = verifyCmd->add_option("--k", k);
  auto* fOpt = verifyCmd->add_option("--f", f);
  auto* presetOpt = verifyCmd->add_option("--preset", preset);
  auto* samplesOpt = verifyCmd->add_option("--samples", samples);
  auto* seedOpt = verifyCmd->add_option("--seed", seed);
  auto* parallelOpt = verifyCmd->add_option("--parallel", parallel);
  verifyCmd->add_option("--out", outDir, "run directory");
  verifyCmd->add_option("--config", configPath, "JSON defaults; flags override");

  auto* constructCmd = app.add_subcommand("construct", "Run the constructive search on a file");
  constructCmd->add_option("file", file)->required();
  constructCmd->add_option("--r", r)->required();
  constructCmd->add_option("--preset", preset)->capture_default_str();
  constructCmd->add_option("--k", k);
  constructCmd->add_option("--f", f);
  constructCmd->add_option("--seed", seed)->capture_default_str();

  auto* boundsCmd = app.add_subcommand("bounds", "Paper constants and inequality checks per r");
  boundsCmd->add_option("--r-range", rRange, "A..B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validateCmd) return runValidate(file, mode, r);
    if (*oracleCmd) return runOracle(oracleKind, file, maxLen);
    if (*constructCmd) return runConstruct(file, r, preset, k, f, seed);
    if (*boundsCmd) return runBounds(rRange);
    if (*verifyCmd) {
      VerifyConfig cfg;
      cfg.statement = statement;
      if (!configPath.empty()) applyConfig(configPath, cfg);
      if (familyOpt->count()) cfg.family = family;
      if (nRangeOpt->count()) std::tie(cfg.nMin, cfg.nMax) = parseRange(nRange);
      if (rOpt->count()) cfg.r = r;
      if (kOpt->count()) cfg.k = static_cast<int>(k);
      if (fOpt->count()) cfg.f = f;
      if (presetOpt->count()) cfg.preset = preset;
      if (samplesOpt->count()) cfg.samples = samples;
      if (seedOpt->count()) cfg.seed = seed;
      if (parallelOpt->count()) cfg.parallel = parallel;
      std::string command;
      for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);
      return runVerifyCommand(cfg, outDir, command);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
