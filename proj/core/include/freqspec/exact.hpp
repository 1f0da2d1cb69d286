#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "freqspec/dataset.hpp"
#include "freqspec/isotonic.hpp"

namespace freqspec {

inline constexpr std::uint64_t kDefaultExactCap = 50'000'000;

/// Thrown when exhaustive enumeration would exceed its itemset cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::uint64_t cap);
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

/// Exact pattern frequency spectrum for thresholds >= sigma_min.
class ExactSpectrum {
 public:
  ExactSpectrum(std::size_t sigma_min, std::size_t n_rows, bool include_empty_set,
                std::vector<std::uint64_t> histogram);

  std::size_t sigma_min() const { return sigma_min_; }
  std::size_t n_rows() const { return n_rows_; }
  bool include_empty_set() const { return include_empty_set_; }

  /// histogram()[s] = number of counted itemsets with support exactly s, for
  /// s in [0, n_rows]; entries below sigma_min are zero.
  const std::vector<std::uint64_t>& histogram() const { return histogram_; }

  /// Number of itemsets with support >= sigma. Defined for sigma >=
  /// sigma_min(); zero above n_rows.
  std::uint64_t count_at(std::size_t sigma) const;

  /// (sigma, count) for sigma in [sigma_min, n_rows].
  std::vector<std::pair<std::size_t, std::uint64_t>> spectrum() const;

  /// Step function with one breakpoint per integer sigma in
  /// [sigma_min, n_rows].
  SpectrumCurve as_curve() const;

  /// Total itemsets counted (support >= sigma_min).
  std::uint64_t total() const { return count_at(sigma_min_); }

 private:
  std::size_t sigma_min_;
  std::size_t n_rows_;
  bool include_empty_set_;
  std::vector<std::uint64_t> histogram_;
  std::vector<std::uint64_t> at_least_;  // suffix sums of histogram_
};

/// Depth-first enumeration of every itemset with support >= sigma_min, each
/// visited once by extending with attributes of larger index only. Throws
/// CapExceeded once more than max_count itemsets have been enumerated.
ExactSpectrum exact_spectrum(const TransactionDatabase& db, std::size_t sigma_min,
                             std::uint64_t max_count = kDefaultExactCap,
                             bool include_empty_set = true);

}  // namespace freqspec
