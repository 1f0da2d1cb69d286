#pragma once

// Exact expectation of the sampler's estimate: follows every branch the
// sampler could take (via the core's own extension scan and estimator) and
// weights each complete path by the product of 1/d_i.

#include <vector>

#include "freqspec/sampler.hpp"

namespace freqspec::testing {

inline double sampler_expectation(const TransactionDatabase& db, std::size_t sigma) {
  double expectation = 0.0;
  std::vector<std::uint32_t> branching;
  auto walk = [&](auto&& self, const BitVector& mask, std::vector<ColumnIndex> candidates,
                  double prob) -> void {
    const auto ext = frequent_extensions(db, mask, candidates, sigma);
    if (ext.empty()) {
      expectation += prob * path_estimate_lattice(branching);
      return;
    }
    branching.push_back(static_cast<std::uint32_t>(ext.size()));
    for (auto item : ext) {
      std::vector<ColumnIndex> rest;
      for (auto c : ext) {
        if (c != item) rest.push_back(c);
      }
      self(self, mask & db.column(item), rest, prob / static_cast<double>(ext.size()));
    }
    branching.pop_back();
  };
  std::vector<ColumnIndex> all(db.n_attrs());
  for (ColumnIndex j = 0; j < db.n_attrs(); ++j) all[j] = j;
  walk(walk, db.all_rows(), all, 1.0);
  return expectation;
}

}  // namespace freqspec::testing
