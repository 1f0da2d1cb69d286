#include "freqspec/rng.hpp"

#include <limits>
#include <stdexcept>

namespace freqspec {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  // Two rounds: the inner mix decorrelates nearby master seeds before the
  // index is folded in.
  return mix64(mix64(master_seed) ^ (index * 0xD1B54A32D192ED03ULL));
}

std::uint64_t PathRng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("PathRng::uniform_below: bound must be > 0");
  // Values below `threshold` would over-represent the low residues.
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - bound + 1) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t PathRng::uniform_between(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("PathRng::uniform_between: lo > hi");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  return lo + uniform_below(span + 1);
}

PathRng derive_path_rng(std::uint64_t master_seed, std::uint64_t path_index) {
  return PathRng(derive_seed(master_seed, path_index));
}

}  // namespace freqspec
