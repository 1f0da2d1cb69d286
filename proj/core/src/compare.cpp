#include "freqspec/compare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace freqspec {

namespace {

double log_gap(double a, double b) {
  return std::abs(std::log10(std::max(a, 1.0)) - std::log10(std::max(b, 1.0)));
}

}  // namespace

std::vector<LogErrorRow> compare_curves(const SpectrumCurve& curve, const SpectrumCurve& reference,
                                        std::span<const double> sigma_grid) {
  std::vector<LogErrorRow> rows;
  rows.reserve(sigma_grid.size());
  for (double sigma : sigma_grid) {
    const double a = evaluate_curve(curve, sigma);
    const double b = evaluate_curve(reference, sigma);
    rows.push_back({sigma, a, b, log_gap(a, b)});
  }
  return rows;
}

std::vector<LogErrorRow> compare_spectra(const SpectrumCurve& curve, const ExactSpectrum& exact,
                                         std::span<const double> sigma_grid) {
  std::vector<LogErrorRow> rows;
  rows.reserve(sigma_grid.size());
  for (double sigma : sigma_grid) {
    if (sigma < static_cast<double>(exact.sigma_min())) {
      throw std::out_of_range("compare_spectra: sigma " + std::to_string(sigma) +
                              " below the exact spectrum's minimum " +
                              std::to_string(exact.sigma_min()));
    }
    const double a = evaluate_curve(curve, sigma);
    const auto b = static_cast<double>(exact.count_at(static_cast<std::size_t>(std::ceil(sigma))));
    rows.push_back({sigma, a, b, log_gap(a, b)});
  }
  return rows;
}

std::vector<double> integer_grid(std::size_t lo, std::size_t hi, std::size_t n) {
  if (lo > hi) throw std::invalid_argument("integer_grid: lo > hi");
  if (n == 0) return {};
  std::vector<double> grid;
  if (n == 1 || lo == hi) {
    grid.push_back(static_cast<double>(lo));
    return grid;
  }
  const double step = static_cast<double>(hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::round(static_cast<double>(lo) + step * static_cast<double>(i));
    if (grid.empty() || grid.back() != v) grid.push_back(v);
  }
  return grid;
}

double median_error(std::span<const LogErrorRow> rows) {
  if (rows.empty()) throw std::invalid_argument("median_error: no rows");
  std::vector<double> errors;
  errors.reserve(rows.size());
  for (const auto& r : rows) errors.push_back(r.error);
  std::sort(errors.begin(), errors.end());
  const std::size_t mid = errors.size() / 2;
  return errors.size() % 2 == 1 ? errors[mid] : 0.5 * (errors[mid - 1] + errors[mid]);
}

double max_error(std::span<const LogErrorRow> rows) {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.error);
  return worst;
}

}  // namespace freqspec
