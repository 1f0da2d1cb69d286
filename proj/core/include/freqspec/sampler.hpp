#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "freqspec/dataset.hpp"
#include "freqspec/rng.hpp"

namespace freqspec {

/// One root-to-positive-border walk through the itemset lattice.
struct PathSample {
  std::size_t sigma = 0;
  /// Branching factors d_0..d_{h-1}; every entry >= 1.
  std::vector<std::uint32_t> branching;
  /// Attribute added at each step, parallel to branching.
  std::vector<ColumnIndex> items;
  /// path_estimate_lattice(branching).
  double estimate = 1.0;

  std::size_t depth() const { return branching.size(); }
};

/// Knuth's tree-size estimate: 1 + sum over levels j=1..h of d_0*...*d_{j-1}.
/// Exact for a perfectly regular tree.
double path_estimate_tree(std::span<const std::uint32_t> branching);

/// Lattice estimate: each level-j product is divided by j!, since every
/// level-j itemset is reachable through j! orderings of its items.
double path_estimate_lattice(std::span<const std::uint32_t> branching);

/// Attributes in `candidates` whose support under `mask` is at least sigma.
/// Order of `candidates` is preserved.
std::vector<ColumnIndex> frequent_extensions(const TransactionDatabase& db, const BitVector& mask,
                                             std::span<const ColumnIndex> candidates,
                                             std::size_t sigma);

/// Samples one path at threshold sigma: starting from the empty itemset,
/// repeatedly picks a frequent extension uniformly at random until none is
/// left. Requires 1 <= sigma <= n_rows (std::invalid_argument otherwise).
PathSample sample_path(const TransactionDatabase& db, std::size_t sigma, PathRng& rng);

/// Branching factors observed when adding `items` in order at threshold
/// sigma, stopping after the last item (the final, empty, step is not
/// included). Throws if some item is not a frequent extension at its step.
std::vector<std::uint32_t> replay_branching(const TransactionDatabase& db, std::size_t sigma,
                                            std::span<const ColumnIndex> items);

}  // namespace freqspec
