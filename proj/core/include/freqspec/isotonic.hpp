#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace freqspec {

struct WeightedPoint {
  double x = 0.0;
  double y = 0.0;
  double w = 1.0;
};

/// Non-increasing step function: levels[j] holds on [breakpoints[j],
/// breakpoints[j+1]). Breakpoints strictly ascend.
struct SpectrumCurve {
  std::vector<double> breakpoints;
  std::vector<double> levels;

  bool empty() const { return breakpoints.empty(); }
  std::size_t size() const { return breakpoints.size(); }

  bool operator==(const SpectrumCurve&) const = default;
};

/// Least-squares non-increasing fit (Pool Adjacent Violators). Points must be
/// non-empty, strictly ascending in x, with positive finite weights. Returns
/// one level per input x; pooled blocks share their weighted mean.
SpectrumCurve pava_decreasing(std::span<const WeightedPoint> points);

/// Sorts by x and collapses equal-x points into one point carrying the
/// weighted mean of y and the summed weight.
std::vector<WeightedPoint> merge_tied_points(std::span<const WeightedPoint> points);

/// Right-open step evaluation, clamped to the first/last level outside the
/// breakpoint range.
double evaluate_curve(const SpectrumCurve& curve, double sigma);

}  // namespace freqspec
