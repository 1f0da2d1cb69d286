#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "freqspec/exact.hpp"
#include "freqspec/isotonic.hpp"

namespace freqspec {

struct LogErrorRow {
  double sigma = 0.0;
  double value = 0.0;      // curve under test
  double reference = 0.0;  // reference curve / exact count
  /// |log10(max(value, 1)) - log10(max(reference, 1))|
  double error = 0.0;
};

/// Per-sigma log10 error between two step functions.
std::vector<LogErrorRow> compare_curves(const SpectrumCurve& curve, const SpectrumCurve& reference,
                                        std::span<const double> sigma_grid);

/// Per-sigma log10 error of a fitted curve against the exact spectrum. Grid
/// points below exact.sigma_min() are rejected with std::out_of_range; a
/// fractional sigma reads the exact count at its ceiling.
std::vector<LogErrorRow> compare_spectra(const SpectrumCurve& curve, const ExactSpectrum& exact,
                                         std::span<const double> sigma_grid);

/// `n` evenly spaced integer thresholds from lo to hi inclusive (duplicates
/// from rounding are dropped).
std::vector<double> integer_grid(std::size_t lo, std::size_t hi, std::size_t n);

double median_error(std::span<const LogErrorRow> rows);
double max_error(std::span<const LogErrorRow> rows);

}  // namespace freqspec
