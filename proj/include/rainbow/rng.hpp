#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rainbow {

/// SplitMix64 (Steele, Lea, Flood 2014). The whole generator is the state
/// update plus output mix below, so instances replay bit-for-bit in any
/// implementation that follows it:
///
///   state += 0x9e3779b97f4a7c15
///   z = state
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
///
/// Bounded draws use rejection on the top of the 64-bit range, never modulo
/// bias, and never the implementation-defined std distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Bernoulli with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Fisher-Yates, high index first.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

/// Child seed for work item `index` of a run seeded with `master`.
inline std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 mix(master ^ (0x632be59bd9b4e019ULL * (index + 1)));
  return mix.next();
}

}  // namespace rainbow
