#pragma once

#include <cstdint>
#include <random>

namespace freqspec {

/// SplitMix64 finalizer; a bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t x);

/// Seed for stream `index` under `master_seed`. Stateless, so a stream's
/// contents never depend on how work is scheduled.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

/// Deterministic generator for one sampled path (or one randomized column).
class PathRng {
 public:
  explicit PathRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling, so every
  /// value is exactly equally likely.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform integer in [lo, hi], lo <= hi.
  std::uint64_t uniform_between(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

PathRng derive_path_rng(std::uint64_t master_seed, std::uint64_t path_index);

}  // namespace freqspec
