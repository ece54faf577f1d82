#pragma once

#include <cmath>
#include <cstdint>

namespace swivel {

/// Counter-based pseudo-random generator (splitmix64 finalizer over a
/// keyed counter). Stateless: draw i of stream s under a seed is a pure
/// function of (seed, s, i), so partitioning work across threads cannot
/// change the sample values.
struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t bits(std::uint64_t counter) const {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
    x += mix(stream + 0x6a09e667f3bcc909ULL);
    return mix(x);
  }

  /// Uniform double in [0, 1).
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  CounterRng substream(std::uint64_t s) const { return CounterRng{seed, mix(stream ^ s)}; }
};

/// Two-sided 99% normal quantile used for Monte Carlo half-widths.
inline constexpr double z_99 = 2.5758293035489004;

/// A stochastic estimate together with its reproducibility context.
struct MonteCarloEstimate {
  double value = 0.0;
  double half_width = 0.0;  // 99% confidence half-width
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

}  // namespace swivel
