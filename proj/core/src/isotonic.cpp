#include "freqspec/isotonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace freqspec {

namespace {

struct Block {
  double sum_wy;
  double sum_w;
  // Kept separately so a block of equal values reports that value exactly
  // rather than sum_wy / sum_w, which can be off by an ulp.
  double mean;
  std::size_t first;  // index of the first input point in the block
};

}  // namespace

SpectrumCurve pava_decreasing(std::span<const WeightedPoint> points) {
  if (points.empty()) throw std::invalid_argument("pava_decreasing: no points");
  for (std::size_t k = 0; k < points.size(); ++k) {
    const WeightedPoint& p = points[k];
    if (!(p.w > 0.0) || !std::isfinite(p.w) || !std::isfinite(p.y) || !std::isfinite(p.x)) {
      throw std::invalid_argument("pava_decreasing: point " + std::to_string(k) +
                                  " has non-finite value or non-positive weight");
    }
    if (k > 0 && !(points[k - 1].x < p.x)) {
      throw std::invalid_argument("pava_decreasing: x values must be strictly ascending (index " +
                                  std::to_string(k) + ")");
    }
  }

  std::vector<Block> stack;
  stack.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    stack.push_back({points[k].w * points[k].y, points[k].w, points[k].y, k});
    // A violation is a block whose mean exceeds its left neighbour's.
    while (stack.size() > 1 && stack[stack.size() - 2].mean < stack.back().mean) {
      const Block top = stack.back();
      stack.pop_back();
      Block& left = stack.back();
      left.sum_wy += top.sum_wy;
      left.sum_w += top.sum_w;
      left.mean = left.sum_wy / left.sum_w;
    }
  }

  SpectrumCurve curve;
  curve.breakpoints.reserve(points.size());
  curve.levels.reserve(points.size());
  for (std::size_t b = 0; b < stack.size(); ++b) {
    const std::size_t end = b + 1 < stack.size() ? stack[b + 1].first : points.size();
    const double level = stack[b].mean;
    for (std::size_t k = stack[b].first; k < end; ++k) {
      curve.breakpoints.push_back(points[k].x);
      curve.levels.push_back(level);
    }
  }
  return curve;
}

std::vector<WeightedPoint> merge_tied_points(std::span<const WeightedPoint> points) {
  std::vector<WeightedPoint> sorted(points.begin(), points.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const WeightedPoint& a, const WeightedPoint& b) { return a.x < b.x; });

  std::vector<WeightedPoint> merged;
  std::size_t k = 0;
  while (k < sorted.size()) {
    double sum_wy = 0.0;
    double sum_w = 0.0;
    const double x = sorted[k].x;
    for (; k < sorted.size() && sorted[k].x == x; ++k) {
      sum_wy += sorted[k].w * sorted[k].y;
      sum_w += sorted[k].w;
    }
    merged.push_back({x, sum_wy / sum_w, sum_w});
  }
  return merged;
}

double evaluate_curve(const SpectrumCurve& curve, double sigma) {
  if (curve.empty()) throw std::invalid_argument("evaluate_curve: empty curve");
  const auto& b = curve.breakpoints;
  // Last breakpoint <= sigma; clamp to the first level if none.
  const auto it = std::upper_bound(b.begin(), b.end(), sigma);
  if (it == b.begin()) return curve.levels.front();
  return curve.levels[static_cast<std::size_t>(it - b.begin()) - 1];
}

}  // namespace freqspec
