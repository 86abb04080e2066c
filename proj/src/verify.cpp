#include "rainbow/verify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "rainbow/bounds.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::ConjecturalViolation: return "conjectural-violation";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

const std::vector<std::string> kStatements{"aharoni", "ch", "devos", "clinch", "main", "shen", "bs-girth"};

enum class Input { Colored, Digraph, Undirected };

Input inputOf(const std::string& statement) {
  if (statement == "ch" || statement == "shen") return Input::Digraph;
  if (statement == "bs-girth") return Input::Undirected;
  return Input::Colored;
}

std::uint64_t exhaustiveCount(int n) { return std::uint64_t{1} << (n * (n - 1)); }

void setBound(VerifyRow& row, std::string name, std::string exact, double value) {
  row.boundName = std::move(name);
  row.boundExact = std::move(exact);
  row.boundValue = value;
  if (row.observable) row.slack = value - static_cast<double>(*row.observable);
}

VerifyRow notApplicable(VerifyRow row, std::string why) {
  row.verdict = Verdict::NotApplicable;
  row.note = std::move(why);
  return row;
}

/// Statements about the shortest rainbow cycle of a colored instance.
VerifyRow colored(VerifyRow row, const EdgeColoredGraph& g, int r) {
  const ValidationReport rep = validate(g, ValidationMode::large(r));
  if (!rep.ok()) return notApplicable(std::move(row), "hypothesis: " + rep.violations.front().rule);
  const std::int64_t n = g.vertexCount();
  auto best = shortestRainbowCycle(g);
  if (best) row.observable = best->length();

  bool proved = true;
  Rational limit;
  if (row.statement == "aharoni") {
    limit = aharoniBound(n, r);
    setBound(row, "ceil(n/r)", toString(limit), toDouble(limit));
    proved = r <= 2;
  } else if (row.statement == "devos") {
    limit = devosBound(n);
    setBound(row, "ceil(n/2)", toString(limit), toDouble(limit));
  } else {
    limit = clinchBound(n);
    setBound(row, "4n/9+7", toString(limit), toDouble(limit));
  }
  const bool ok = best && Rational(best->length()) <= limit;
  if (!best) row.note = "no rainbow cycle";
  row.verdict = ok ? Verdict::Holds : (proved ? Verdict::Violated : Verdict::ConjecturalViolation);
  return row;
}

VerifyRow caccetta(VerifyRow row, const Digraph& d, const VerifyConfig& cfg) {
  if (d.minOutDegree() < cfg.r) return notApplicable(std::move(row), "hypothesis: min out-degree below r");
  auto g = directedGirth(d);
  if (g) row.observable = *g;
  const std::int64_t b = aharoniBound(d.vertexCount(), cfg.r);
  setBound(row, "ceil(n/r)", std::to_string(b), static_cast<double>(b));
  row.verdict = (g && *g <= b) ? Verdict::Holds : Verdict::ConjecturalViolation;
  return row;
}

VerifyRow shen(VerifyRow row, const Digraph& d, const VerifyConfig& cfg) {
  if (d.minOutDegree() < 1) return notApplicable(std::move(row), "hypothesis: digraph has a sink");
  auto g = directedGirth(d);
  if (!g) throw std::logic_error("sink-free digraph without a directed cycle");
  if (*g < 2 * cfg.r - 1) return notApplicable(std::move(row), "hypothesis: girth below 2r-1");
  const BoundReport rep = shenCheck(d.vertexCount(), *g, cfg.r, digraphDefect(d, cfg.r));
  // Observable is n; the bound is the lower bound r(g-1)+1-def, so slack = n - bound.
  row.observable = d.vertexCount();
  row.boundName = "r(g-1)+1-def";
  row.boundExact = rep.value;
  row.boundValue = rep.approx;
  row.slack = static_cast<double>(d.vertexCount()) - rep.approx;
  row.note = "girth " + std::to_string(*g);
  row.verdict = rep.satisfied.value_or(false) ? Verdict::Holds : Verdict::Violated;
  return row;
}

VerifyRow bsGirth(VerifyRow row, const UndirectedGraph& h, int k) {
  if (h.n < 4 || k < 2) return notApplicable(std::move(row), "hypothesis: needs n >= 4 and k >= 2");
  auto g = girth(h);
  if (g) row.observable = *g;
  const double cor = excessGirthBound(h.n, k);
  const double bs = bsGirthBound(h.n, k);
  setBound(row, "14(n+k)log2(k)/(3k)", std::to_string(cor), cor);
  const bool ok = g && *g <= cor + 1e-9 && bs <= cor + 1e-9;
  if (bs > cor + 1e-9) row.note = "sharper girth bound exceeds the simplified one";
  row.verdict = ok ? Verdict::Holds : Verdict::Violated;
  return row;
}

VerifyRow mainSearch(VerifyRow row, const EdgeColoredGraph& g, const VerifyConfig& cfg, std::uint64_t seed) {
  const ValidationReport rep = validate(g, ValidationMode::bounded(cfg.r));
  if (!rep.ok()) return notApplicable(std::move(row), "hypothesis: " + rep.violations.front().rule);
  const Constants consts = cfg.preset == "toy" ? Constants::toy(cfg.r, cfg.k, cfg.f) : Constants::paper(cfg.r);
  SearchOptions opts;
  opts.seed = seed;
  const SearchOutcome out = constructRainbowCycle(g, consts, opts);
  std::string trail;
  for (Branch b : out.trail) trail += (trail.empty() ? "" : ">") + branchName(b);
  if (!out.found()) {
    std::string why = "search ended without a cycle (" + trail + ")";
    for (const auto& d : out.diagnostics) why += "; " + d;
    return notApplicable(std::move(row), why);
  }
  row.observable = out.cycle->length();
  row.note = trail;
  const auto& bound = out.guarantee ? out.guarantee : out.bound;
  if (bound) setBound(row, bound->name, bound->exact, bound->value);
  const auto optimum = shortestRainbowCycle(g);
  bool ok = !cycleProblem(g, *out.cycle) && optimum && out.cycle->length() >= optimum->length();
  if (bound) ok = ok && bound->satisfied;
  row.verdict = ok ? Verdict::Holds : Verdict::Violated;
  return row;
}

}  // namespace

bool knownStatement(const std::string& statement) {
  return std::find(kStatements.begin(), kStatements.end(), statement) != kStatements.end();
}

std::string defaultFamily(const std::string& statement) {
  if (statement == "ch" || statement == "shen") return "randomDigraph";
  if (statement == "bs-girth") return "excessK";
  return "randomEC";
}

nlohmann::ordered_json toJson(const VerifyRow& row) {
  nlohmann::ordered_json j;
  j["index"] = row.index;
  if (row.spec) j["genSpec"] = toJson(*row.spec);
  if (!row.file.empty()) j["file"] = row.file;
  j["instanceHash"] = row.instanceHash;
  j["statement"] = row.statement;
  j["observable"] = row.observable ? nlohmann::ordered_json(*row.observable) : nlohmann::ordered_json();
  if (!row.boundName.empty()) {
    j["bound"] = {{"name", row.boundName}, {"value", *row.boundValue}, {"exact", row.boundExact}};
  } else {
    j["bound"] = nullptr;
  }
  j["slack"] = row.slack ? nlohmann::ordered_json(*row.slack) : nlohmann::ordered_json();
  j["verdict"] = verdictName(row.verdict);
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

void VerifySummary::add(const VerifyRow& row) {
  ++rows;
  switch (row.verdict) {
    case Verdict::Holds: ++holds; break;
    case Verdict::Violated: ++violated; break;
    case Verdict::ConjecturalViolation: ++conjectural; break;
    case Verdict::NotApplicable: ++notApplicable; break;
  }
  if (row.slack && row.verdict != Verdict::NotApplicable) minSlack = std::min(minSlack.value_or(*row.slack), *row.slack);
}

int VerifySummary::exitCode() const {
  if (violated > 0) return 1;
  if (conjectural > 0) return 3;
  return 0;
}

nlohmann::ordered_json toJson(const VerifySummary& s) {
  nlohmann::ordered_json j;
  j["summary"] = {{"rows", s.rows},
                  {"holds", s.holds},
                  {"violated", s.violated},
                  {"conjecturalViolations", s.conjectural},
                  {"notApplicable", s.notApplicable},
                  {"minSlack", s.minSlack ? nlohmann::ordered_json(*s.minSlack) : nlohmann::ordered_json()}};
  return j;
}

void checkConfig(const VerifyConfig& c) {
  if (!knownStatement(c.statement)) throw std::invalid_argument("unknown statement " + c.statement);
  if (!knownFamily(c.family)) throw std::invalid_argument("unknown family " + c.family);
  if (c.nMin < 1 || c.nMax < c.nMin) throw std::invalid_argument("bad n-range");
  if (c.r < 1) throw std::invalid_argument("r must be at least 1");
  if (c.samples < 0) throw std::invalid_argument("samples must be non-negative");
  const Input in = inputOf(c.statement);
  if (in == Input::Digraph && !producesDigraph(c.family) && c.family != "circulant")
    throw std::invalid_argument("statement " + c.statement + " needs a digraph family");
  if (in == Input::Undirected && c.family != "excessK")
    throw std::invalid_argument("statement " + c.statement + " needs the excessK family");
  if (in == Input::Colored && producesUndirected(c.family))
    throw std::invalid_argument("statement " + c.statement + " needs an edge-colored or digraph family");
  if (c.family == "exhaustive" && c.nMax * (c.nMax - 1) > 30)
    throw std::invalid_argument("exhaustive family is limited to n <= 6");
  if (c.statement == "main") {
    if (c.preset != "paper" && c.preset != "toy") throw std::invalid_argument("preset must be paper or toy");
    if (c.r < 2) throw std::invalid_argument("main needs r >= 2");
    if (c.preset == "toy") Constants::toy(c.r, c.k, c.f);
  }
}

std::uint64_t workItems(const VerifyConfig& c) {
  if (c.family != "exhaustive") return static_cast<std::uint64_t>(c.samples);
  std::uint64_t total = 0;
  for (int n = c.nMin; n <= c.nMax; ++n) total += exhaustiveCount(n);
  return total;
}

std::optional<VerifyRow> computeRow(const VerifyConfig& c, std::uint64_t index) {
  GenSpec spec;
  spec.family = c.family;
  spec.r = c.r;
  const std::uint64_t rowSeed = deriveSeed(c.seed, index);
  if (c.family == "exhaustive") {
    std::uint64_t rest = index;
    int n = c.nMin;
    while (rest >= exhaustiveCount(n)) rest -= exhaustiveCount(n++);
    spec.n = n;
    spec.seed = rest;
    const Digraph d = digraphFromMask(n, rest);
    const int need = c.statement == "ch" ? c.r : 1;
    if (d.minOutDegree() < need) return std::nullopt;
  } else {
    spec.n = c.nMin + static_cast<int>(index % static_cast<std::uint64_t>(c.nMax - c.nMin + 1));
    spec.seed = rowSeed;
    if (c.family == "excessK") {
      const int room = spec.n * (spec.n - 1) / 2 - spec.n;
      SplitMix64 rng(rowSeed);
      spec.k = c.k >= 2 ? c.k : static_cast<int>(rng.between(2, std::max(2, std::min(10, room))));
    }
  }

  VerifyRow row;
  row.index = index;
  row.spec = spec;
  row.statement = c.statement;
  try {
    switch (inputOf(c.statement)) {
      case Input::Colored: {
        const EdgeColoredGraph g = generateColored(spec);
        row.instanceText = serializeGraph(g);
        row.instanceHash = instanceHash(row.instanceText);
        if (c.statement == "main") return mainSearch(std::move(row), g, c, rowSeed);
        const int r = c.statement == "devos" ? 2 : c.statement == "clinch" ? 3 : c.r;
        return colored(std::move(row), g, r);
      }
      case Input::Digraph: {
        const Digraph d = generateDigraph(spec);
        row.instanceText = serializeDigraph(d);
        row.instanceHash = instanceHash(row.instanceText);
        return c.statement == "ch" ? caccetta(std::move(row), d, c) : shen(std::move(row), d, c);
      }
      case Input::Undirected: {
        const UndirectedGraph h = generateUndirected(spec);
        row.instanceText = serializeUndirected(h);
        row.instanceHash = instanceHash(row.instanceText);
        return bsGirth(std::move(row), h, spec.k);
      }
    }
  } catch (const InfeasibleParameters& e) {
    return notApplicable(std::move(row), std::string("infeasible parameters: ") + e.what());
  } catch (const std::exception& e) {
    row.verdict = Verdict::Violated;
    row.note = std::string("exception: ") + e.what();
    return row;
  }
  return row;
}

VerifySummary runVerify(const VerifyConfig& c, const std::function<void(const VerifyRow&)>& sink) {
  checkConfig(c);
  const std::uint64_t total = workItems(c);
  const int threads = std::max(1, c.parallel);
  constexpr std::uint64_t kChunk = 4096;
  VerifySummary summary;
  std::vector<std::optional<VerifyRow>> results;
  for (std::uint64_t base = 0; base < total; base += kChunk) {
    const std::uint64_t count = std::min(kChunk, total - base);
    results.assign(count, std::nullopt);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < count;) results[i] = computeRow(c, base + i);
    };
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (const auto& row : results) {
      if (!row) continue;
      summary.add(*row);
      sink(*row);
    }
  }
  return summary;
}

}  // namespace rainbow
