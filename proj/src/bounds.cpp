#include "rainbow/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace rainbow {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

constexpr double kSlack = 1e-9;

Real log2Real(const Real& x) { return log(x) / log(Real(2)); }

bool isPowerOfTwo(std::int64_t r) { return r > 0 && (r & (r - 1)) == 0; }

int exactLog2(std::int64_t r) {
  int e = 0;
  while ((std::int64_t{1} << e) < r) ++e;
  return e;
}

std::string fmt(const Real& x) {
  std::ostringstream ss;
  ss.precision(12);
  ss << x.convert_to<double>();
  return ss.str();
}

BoundReport report(std::string name, std::vector<std::pair<std::string, std::string>> inputs, std::string value,
                   double approx, std::optional<bool> satisfied) {
  return BoundReport{std::move(name), std::move(inputs), std::move(value), approx, satisfied};
}

void requireGirthArgs(std::int64_t n, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("girth bound needs k >= 2");
  if (n < 4) throw std::invalid_argument("girth bound needs n >= 4");
}

}  // namespace

std::string toString(const BigInt& x) { return x.str(); }

std::string toString(const Rational& x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

double toDouble(const Rational& x) { return x.convert_to<double>(); }

BigInt paperK(int r) {
  if (r < 2) throw std::invalid_argument("paper constants need r >= 2");
  if (isPowerOfTwo(r)) return BigInt(78) * r * exactLog2(r);
  Real x = Real(78) * r * log2Real(Real(r));
  Real lo = x - Real(kSlack);
  Real hi = x + Real(kSlack);
  if (ceil(lo) != ceil(hi)) {
    throw std::domain_error("78 r log2 r is within 1e-9 of an integer at r = " + std::to_string(r));
  }
  BigInt k = static_cast<BigInt>(ceil(x));
  if (!(Real(k) >= x && Real(k) < x + 1)) throw std::logic_error("ceiling check failed");
  return k;
}

Constants Constants::paper(int r) {
  Constants c;
  c.r = r;
  c.k = paperK(r);
  c.f = 80 * c.k * c.k * r * r;
  c.alpha = (4 * BigInt(r) + 2) * c.f + 2 * BigInt(r) * r;
  c.preset = Preset::Paper;
  return c;
}

Constants Constants::toy(int r, std::int64_t k, std::int64_t f, BigInt alpha) {
  if (r < 1) throw std::invalid_argument("toy constants need r >= 1");
  if (k < 2) throw std::invalid_argument("toy constants need k >= 2");
  if (f < 2 * k) throw std::invalid_argument("toy constants need f >= 2k");
  if (alpha < 0) throw std::invalid_argument("toy constants need alpha >= 0");
  Constants c;
  c.r = r;
  c.k = k;
  c.f = f;
  c.alpha = std::move(alpha);
  c.preset = Preset::Toy;
  return c;
}

Constants paperConstants(int r) { return Constants::paper(r); }

BigInt alphaEnvelope(int r) {
  if (r < 2) throw std::invalid_argument("alpha envelope needs r >= 2");
  BigInt base = BigInt(3000000) * boost::multiprecision::pow(BigInt(r), 5);
  if (isPowerOfTwo(r)) {
    const int l = exactLog2(r);
    return base * l * l;
  }
  Real l = log2Real(Real(r));
  return static_cast<BigInt>(ceil(Real(base) * l * l));
}

std::int64_t ceilDiv(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::invalid_argument("ceilDiv needs a positive divisor");
  std::int64_t q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::int64_t aharoniBound(std::int64_t n, std::int64_t r) { return ceilDiv(n, r); }

Rational mainBound(std::int64_t n, std::int64_t def, std::int64_t r, const BigInt& alpha) {
  if (r < 1) throw std::invalid_argument("mainBound needs r >= 1");
  return Rational(BigInt(n + def), BigInt(r)) + Rational(alpha);
}

double bsGirthBound(std::int64_t n, std::int64_t k) {
  requireGirthArgs(n, k);
  const double lk = std::log2(static_cast<double>(k));
  return 2.0 * static_cast<double>(n + k) / (3.0 * static_cast<double>(k)) * (lk + std::log2(lk) + 4.0);
}

double excessGirthBound(std::int64_t n, std::int64_t k) {
  requireGirthArgs(n, k);
  return 14.0 * static_cast<double>(n + k) * std::log2(static_cast<double>(k)) / (3.0 * static_cast<double>(k));
}

Rational galaxyDigraphGirthBound(std::int64_t n, std::int64_t r, std::int64_t def) {
  if (r < 1) throw std::invalid_argument("galaxyDigraphGirthBound needs r >= 1");
  return Rational(BigInt(n + r + def), BigInt(r)) + Rational(BigInt(2 * r * r));
}

BigInt coverBound(std::int64_t nSize, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("coverBound needs k >= 2");
  return 4 * binomial(nSize, k - 2);
}

std::int64_t additive73Bound(std::int64_t n, std::int64_t r) { return ceilDiv(n, r) + 73; }

std::int64_t devosBound(std::int64_t n) { return ceilDiv(n, 2); }

Rational clinchBound(std::int64_t n) { return Rational(BigInt(4 * n), BigInt(9)) + 7; }

bool multiplicativeApplies(std::int64_t minClassSize, std::int64_t r) {
  return BigInt(minClassSize) >= BigInt(100000000000LL) * r;
}

BoundReport shenCheck(std::int64_t n, std::int64_t g, std::int64_t r, std::int64_t def) {
  const std::int64_t rhs = r * (g - 1) + 1 - def;
  std::optional<bool> satisfied;
  if (g >= 2 * r - 1) satisfied = n >= rhs;
  return report("shen-girth",
                {{"n", std::to_string(n)}, {"g", std::to_string(g)}, {"r", std::to_string(r)}, {"def", std::to_string(def)}},
                std::to_string(rhs), static_cast<double>(rhs), satisfied);
}

std::vector<BoundReport> inequalityChecks(int r) {
  const Constants c = Constants::paper(r);
  const std::vector<std::pair<std::string, std::string>> in{
      {"r", std::to_string(r)}, {"k", toString(c.k)}, {"f", toString(c.f)}, {"alpha", toString(c.alpha)}};
  std::vector<BoundReport> out;
  const Real k(c.k);
  const Real lk = log2Real(k);

  // Excess-k girth step: 14 log k/(3k) <= 1/(2r), and the bound at n = k is at most k/r.
  Real perVertex = Real(14) * lk / (Real(3) * k);
  Real half = Real(1) / (Real(2) * r);
  out.push_back(report("girth-rate", in, fmt(perVertex), perVertex.convert_to<double>(),
                       perVertex <= half + Real(kSlack)));
  Real atK = Real(28) * lk / Real(3);
  out.push_back(report("girth-at-k", in, fmt(atK), atK.convert_to<double>(), atK <= k / r + Real(kSlack)));
  Real chain = Real(28) * (log2Real(Real(78)) + 2) / Real(234);
  out.push_back(report("girth-chain-constant", in, fmt(chain), chain.convert_to<double>(), chain <= 1 + Real(kSlack)));

  out.push_back(report("f-at-least-2k", in, toString(c.f), c.f.convert_to<double>(), c.f >= 2 * c.k));

  Rational ratio(c.f, 16 * c.k * c.k);
  out.push_back(report("f-over-16k2", in, toString(ratio), toDouble(ratio),
                       c.f == 80 * c.k * c.k * r * r && ratio == Rational(BigInt(5) * r * r)));

  BigInt lhs = 1 + (4 * BigInt(r) - 1) * (BigInt(r) - 2);
  BigInt rhs = BigInt(r) * (5 * BigInt(r) - 4);
  out.push_back(report("lifting-arithmetic", in, toString(lhs), lhs.convert_to<double>(), lhs <= rhs));

  BigInt env = alphaEnvelope(r);
  out.push_back(report("alpha-envelope", in, toString(env), env.convert_to<double>(), c.alpha <= env));
  return out;
}

std::vector<BoundReport> inequalitySuite(int rMax) {
  if (rMax < 2) throw std::invalid_argument("inequalitySuite needs rMax >= 2");
  std::vector<BoundReport> out;
  for (int r = 2; r <= rMax; ++r) {
    auto rows = inequalityChecks(r);
    out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
  }
  return out;
}

}  // namespace rainbow
