#pragma once

#include <cstdint>
#include <random>

namespace graphscan {

/// Seeded random source. Identical seeds produce identical draw sequences on
/// the same build; every consumer below draws exactly one 64-bit word per
/// decision so streams are reproducible across platforms as well.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) from a single engine draw (53-bit resolution).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// One engine draw per call regardless of outcome.
  bool bernoulli(double p) { return next_double() < p; }

  /// Uniform integer in [lo, hi] via rejection-free modulo on 64-bit draws.
  /// Bias is negligible for the small ranges used here (test instance
  /// generation); sampling paths use bernoulli() only.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    return lo + next_u64() % (hi - lo + 1);
  }

  /// Child source for replication `index` of a run seeded with `master`.
  /// Distinct indices give independently seeded engines, so replications can
  /// run on any worker in any order with identical results.
  static RandomSource derived(std::uint64_t master, std::uint64_t index) {
    return RandomSource(mix(master ^ mix(index + 0x9e3779b97f4a7c15ull)));
  }

 private:
  // splitmix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace graphscan
