#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The tuple (r, k, f, alpha) driving the constructive search.
///
/// Paper preset: k = ceil(78 r log2 r), f = 80 k^2 r^2,
/// alpha = (4r + 2) f + 2 r^2. These overflow 64 bits long before r = 10^4,
/// so all three are arbitrary precision.
///
/// Toy preset: k and f are injected (k >= 2, f >= 2k) and alpha defaults to 0
/// so the search always enters the structural branches. A toy preset keeps
/// every returned cycle sound but voids the length guarantee.
struct Constants {
  enum class Preset { Paper, Toy };

  int r = 2;
  BigInt k;
  BigInt f;
  BigInt alpha;
  Preset preset = Preset::Paper;

  static Constants paper(int r);
  static Constants toy(int r, std::int64_t k, std::int64_t f, BigInt alpha = 0);

  bool lengthGuaranteed() const { return preset == Preset::Paper; }
};

/// k = ceil(78 r log2 r). Throws std::invalid_argument for r < 2 and
/// std::domain_error if 78 r log2 r lies within 1e-9 of an integer without
/// being one (the ceiling would be ambiguous).
BigInt paperK(int r);

Constants paperConstants(int r);

/// ceil(3,000,000 r^5 (log2 r)^2).
BigInt alphaEnvelope(int r);

std::int64_t ceilDiv(std::int64_t a, std::int64_t b);
BigInt binomial(std::int64_t n, std::int64_t k);

std::int64_t aharoniBound(std::int64_t n, std::int64_t r);
/// (n + def) / r + alpha.
Rational mainBound(std::int64_t n, std::int64_t def, std::int64_t r, const BigInt& alpha);
/// 2(n + k)/(3k) * (log2 k + log2 log2 k + 4); requires n >= 4, k >= 2.
double bsGirthBound(std::int64_t n, std::int64_t k);
/// 14 (n + k) log2 k / (3k); requires n >= 4, k >= 2.
double excessGirthBound(std::int64_t n, std::int64_t k);
/// (n + r + def)/r + 2 r^2.
Rational galaxyDigraphGirthBound(std::int64_t n, std::int64_t r, std::int64_t def);
/// 4 * C(nSize, k - 2); requires k >= 2.
BigInt coverBound(std::int64_t nSize, std::int64_t k);

/// Evaluators for the known partial results, for harness rows.
std::int64_t additive73Bound(std::int64_t n, std::int64_t r);  // ceil(n/r) + 73
std::int64_t devosBound(std::int64_t n);                       // ceil(n/2)
Rational clinchBound(std::int64_t n);                          // 4n/9 + 7
bool multiplicativeApplies(std::int64_t minClassSize, std::int64_t r);  // min size >= 10^11 r

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string value;  // exact text when the formula is rational
  double approx = 0.0;
  std::optional<bool> satisfied;
};

/// Girth-bound check n >= r(g - 1) + 1 - def. Only meaningful when
/// g >= 2r - 1; otherwise `satisfied` is left empty.
BoundReport shenCheck(std::int64_t n, std::int64_t g, std::int64_t r, std::int64_t def);

/// The arithmetic facts the constructive argument consumes, for one r.
std::vector<BoundReport> inequalityChecks(int r);
/// inequalityChecks for every r in [2, rMax].
std::vector<BoundReport> inequalitySuite(int rMax);

std::string toString(const BigInt& x);
std::string toString(const Rational& x);
double toDouble(const Rational& x);

}  // namespace rainbow
