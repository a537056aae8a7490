#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace stochtop {

/// SplitMix64 finalizer; a stable 64-bit mixing function.
std::uint64_t mix64(std::uint64_t x);

/// Stable per-stream seed: hash of the master seed and a list of indices.
/// Streams for distinct index lists are (statistically) independent.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> indices);

/// Pseudo-random source with platform-independent derived draws.
///
/// Only the raw 64-bit output of std::mt19937_64 is used (its sequence is
/// fixed by the standard); uniform, Bernoulli, geometric and Poisson draws are
/// computed here so results are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1].
  double uniform_open0() { return 1.0 - uniform(); }
  /// Uniform integer on [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// One draw: true with probability p.
  bool bernoulli(double p) { return uniform() < p; }
  /// Number of failures before the first success of Bernoulli(p) trials (one draw).
  std::uint64_t geometric_failures(double p);
  /// Poisson(lambda) by inversion (chunked for lambda > 30).
  std::uint32_t poisson(double lambda);

 private:
  std::mt19937_64 engine_;
};

}  // namespace stochtop
