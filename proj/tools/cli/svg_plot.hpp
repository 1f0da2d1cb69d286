#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freqspec::cli {

struct PlotSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> xy;
  /// Step function (true) or scatter markers (false).
  bool step = true;
};

/// Static SVG chart with a log10 y-axis. Non-positive y values are drawn at
/// the axis floor.
std::string render_svg(std::span<const PlotSeries> series, std::string_view title);

inline constexpr const char* kEstimateColor = "#1f4fd1";
inline constexpr const char* kBaselineColor = "#2ca02c";
inline constexpr const char* kExactColor = "#000000";
inline constexpr const char* kPointColor = "#a0a0a0";

}  // namespace freqspec::cli
