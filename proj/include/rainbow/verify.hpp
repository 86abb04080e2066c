#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/generators.hpp"

namespace rainbow {

/// holds: the statement's inequality holds on the row.
/// violated: a proved statement failed (an implementation bug).
/// conjectural-violation: an open conjecture failed; persisted, never asserted.
/// not-applicable: the instance misses the statement's hypotheses, or a toy
/// search ended without a cycle.
enum class Verdict { Holds, Violated, ConjecturalViolation, NotApplicable };

std::string verdictName(Verdict v);

/// Statements a sweep can check:
///   aharoni   shortest rainbow cycle <= ceil(n/r), classes of size >= r
///   ch        directed girth <= ceil(n/r), min out-degree >= r
///   devos     shortest rainbow cycle <= ceil(n/2), classes of size >= 2
///   clinch    shortest rainbow cycle <= 4n/9 + 7, classes of size >= 3
///   main      constructive search soundness (and its length bound for the paper preset)
///   shen      n >= r(g - 1) + 1 - def_r for sink-free digraphs with g >= 2r - 1
///   bs-girth  girth <= 14(n + k) log2 k / (3k) for connected excess-k graphs
bool knownStatement(const std::string& statement);
/// The family used when none is given.
std::string defaultFamily(const std::string& statement);

struct VerifyConfig {
  std::string statement;
  std::string family;  // a GenSpec family, or "exhaustive" for ch/shen
  int nMin = 4;
  int nMax = 10;
  int r = 2;
  int k = 0;  // bs-girth: fixed excess when >= 2, else drawn from [2, 10]; main: toy k
  std::int64_t f = 0;  // main: toy f
  std::string preset = "paper";  // main only
  int samples = 100;
  std::uint64_t seed = 1;
  int parallel = 1;
};

struct VerifyRow {
  std::uint64_t index = 0;
  std::optional<GenSpec> spec;
  std::string file;
  std::string instanceHash;
  std::string statement;
  std::optional<std::int64_t> observable;
  std::string boundName;
  std::string boundExact;
  std::optional<double> boundValue;
  std::optional<double> slack;
  Verdict verdict = Verdict::Holds;
  std::string note;
  std::string instanceText;  // canonical instance, for counterexample files
};

nlohmann::ordered_json toJson(const VerifyRow& row);

struct VerifySummary {
  std::uint64_t rows = 0;
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t conjectural = 0;
  std::uint64_t notApplicable = 0;
  std::optional<double> minSlack;

  void add(const VerifyRow& row);
  /// 1 on any proved-statement violation, else 3 on any conjectural violation, else 0.
  int exitCode() const;
};

nlohmann::ordered_json toJson(const VerifySummary& s);

/// Throws std::invalid_argument on an unknown statement or family, or a
/// family that cannot feed the statement.
void checkConfig(const VerifyConfig& config);

/// Number of work items (sampled rows, or enumerated arc sets).
std::uint64_t workItems(const VerifyConfig& config);

/// Row for one work item; empty when an enumerated item is filtered out.
std::optional<VerifyRow> computeRow(const VerifyConfig& config, std::uint64_t index);

/// Evaluates every work item on `parallel` threads and hands rows to `sink`
/// in index order, so the output does not depend on scheduling.
VerifySummary runVerify(const VerifyConfig& config, const std::function<void(const VerifyRow&)>& sink);

}  // namespace rainbow
