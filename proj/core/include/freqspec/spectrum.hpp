#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "freqspec/dataset.hpp"
#include "freqspec/isotonic.hpp"

namespace freqspec {

/// Space in which the isotonic curve is fitted. Linear is the least-squares
/// fit on the raw estimates; log10 fits log10(1 + e) and maps back.
enum class FitSpace { linear, log10 };

std::string_view to_string(FitSpace space);
FitSpace fit_space_from_string(std::string_view text);

struct SpectrumQuery {
  std::size_t sigma_min = 1;
  std::size_t sigma_max = 1000;
  std::size_t n_paths = 5000;
  std::uint64_t master_seed = 0;
  /// Count the empty itemset (the lattice root). When false every estimate
  /// is reduced by one, floored at zero.
  bool include_empty_set = true;
  FitSpace fit_space = FitSpace::linear;

  /// Throws std::invalid_argument unless 1 <= sigma_min <= sigma_max and
  /// n_paths >= 1.
  void validate() const;

  bool operator==(const SpectrumQuery&) const = default;
};

/// One sampled point (sigma_k, e_k).
struct EstimatePoint {
  std::size_t sigma = 0;
  double estimate = 0.0;

  bool operator==(const EstimatePoint&) const = default;
};

struct DatasetSummary {
  std::size_t n_rows = 0;
  std::size_t n_attrs = 0;

  bool operator==(const DatasetSummary&) const = default;
};

struct SpectrumResult {
  SpectrumQuery query;
  DatasetSummary dataset;
  /// Path order: points[k-1] belongs to path index k.
  std::vector<EstimatePoint> points;
  SpectrumCurve curve;
  double runtime_ms = 0.0;
};

struct ExecutionOptions {
  /// Worker threads for path sampling; 0 picks hardware concurrency.
  unsigned threads = 1;
};

unsigned resolve_thread_count(unsigned requested);

/// Path `path_index` (1-based) of a query: draws sigma uniformly from
/// [sigma_min, sigma_max], then samples a path with the same generator.
EstimatePoint sample_point(const TransactionDatabase& db, const SpectrumQuery& query,
                           std::size_t path_index);

/// Fills out[i] with sample_point(first_index + i). Results do not depend on
/// the thread count.
void sample_points(const TransactionDatabase& db, const SpectrumQuery& query,
                   std::size_t first_index, std::span<EstimatePoint> out,
                   const ExecutionOptions& options = {});

/// Merges tied sigma values and fits the non-increasing curve.
SpectrumCurve fit_spectrum(std::span<const EstimatePoint> points, FitSpace space);

/// Full run: validates the query against the database (sigma_max above
/// n_rows is rejected), samples n_paths points and fits the curve.
SpectrumResult estimate_spectrum(const TransactionDatabase& db, const SpectrumQuery& query,
                                 const ExecutionOptions& options = {});

/// Throws std::invalid_argument if the query is invalid or does not fit db.
void check_query_against(const TransactionDatabase& db, const SpectrumQuery& query);

}  // namespace freqspec
