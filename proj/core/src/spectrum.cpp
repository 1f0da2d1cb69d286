#include "freqspec/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "freqspec/rng.hpp"
#include "freqspec/sampler.hpp"

namespace freqspec {

std::string_view to_string(FitSpace space) {
  switch (space) {
    case FitSpace::linear:
      return "linear";
    case FitSpace::log10:
      return "log10";
  }
  return "linear";
}

FitSpace fit_space_from_string(std::string_view text) {
  if (text == "linear") return FitSpace::linear;
  if (text == "log10") return FitSpace::log10;
  throw std::invalid_argument("unknown fit space '" + std::string(text) +
                              "' (expected linear or log10)");
}

void SpectrumQuery::validate() const {
  if (sigma_min < 1) throw std::invalid_argument("sigma_min must be >= 1");
  if (sigma_min > sigma_max) {
    throw std::invalid_argument("sigma_min (" + std::to_string(sigma_min) +
                                ") exceeds sigma_max (" + std::to_string(sigma_max) + ")");
  }
  if (n_paths < 1) throw std::invalid_argument("number of paths must be >= 1");
}

void check_query_against(const TransactionDatabase& db, const SpectrumQuery& query) {
  query.validate();
  if (query.sigma_max > db.n_rows()) {
    throw std::invalid_argument("sigma_max (" + std::to_string(query.sigma_max) +
                                ") exceeds the number of rows (" + std::to_string(db.n_rows()) +
                                "); thresholds are absolute row counts, clamp sigma_max to " +
                                std::to_string(db.n_rows()));
  }
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

EstimatePoint sample_point(const TransactionDatabase& db, const SpectrumQuery& query,
                           std::size_t path_index) {
  PathRng rng = derive_path_rng(query.master_seed, path_index);
  const auto sigma = static_cast<std::size_t>(rng.uniform_between(query.sigma_min, query.sigma_max));
  const PathSample path = sample_path(db, sigma, rng);
  double estimate = path.estimate;
  if (!query.include_empty_set) estimate = std::max(estimate - 1.0, 0.0);
  return {sigma, estimate};
}

void sample_points(const TransactionDatabase& db, const SpectrumQuery& query,
                   std::size_t first_index, std::span<EstimatePoint> out,
                   const ExecutionOptions& options) {
  const std::size_t n = out.size();
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(resolve_thread_count(options.threads),
                                                  std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = sample_point(db, query, first_index + i);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      // Interleaved assignment balances paths whose cost varies with sigma.
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < n; i += threads) {
            out[i] = sample_point(db, query, first_index + i);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

SpectrumCurve fit_spectrum(std::span<const EstimatePoint> points, FitSpace space) {
  std::vector<WeightedPoint> weighted;
  weighted.reserve(points.size());
  for (const EstimatePoint& p : points) {
    const double y = space == FitSpace::log10 ? std::log10(1.0 + p.estimate) : p.estimate;
    weighted.push_back({static_cast<double>(p.sigma), y, 1.0});
  }
  const auto merged = merge_tied_points(weighted);
  SpectrumCurve curve = pava_decreasing(merged);
  if (space == FitSpace::log10) {
    for (double& level : curve.levels) level = std::pow(10.0, level) - 1.0;
  }
  return curve;
}

SpectrumResult estimate_spectrum(const TransactionDatabase& db, const SpectrumQuery& query,
                                 const ExecutionOptions& options) {
  check_query_against(db, query);
  const auto start = std::chrono::steady_clock::now();

  SpectrumResult result;
  result.query = query;
  result.dataset = {db.n_rows(), db.n_attrs()};
  result.points.resize(query.n_paths);
  sample_points(db, query, 1, result.points, options);
  result.curve = fit_spectrum(result.points, query.fit_space);

  const auto elapsed = std::chrono::steady_clock::now() - start;
  result.runtime_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  return result;
}

}  // namespace freqspec
