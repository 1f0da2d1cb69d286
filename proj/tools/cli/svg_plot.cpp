#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace freqspec::cli {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 80;
constexpr double kRight = 160;
constexpr double kTop = 40;
constexpr double kBottom = 60;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(std::span<const PlotSeries> series, std::string_view title) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_hi = 0.0;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.xy) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      if (y > 0) y_hi = std::max(y_hi, std::log10(y));
    }
  }
  if (!(x_lo < x_hi)) {
    x_lo = std::isfinite(x_lo) ? x_lo - 1 : 0;
    x_hi = x_lo + 2;
  }
  const double y_top = std::max(1.0, std::ceil(y_hi));
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) {
    const double ly = y > 0 ? std::clamp(std::log10(y), 0.0, y_top) : 0.0;
    return kTop + plot_h - ly / y_top * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(title) + "</text>\n";

  // Axes, decade ticks on y, five ticks on x.
  svg += "<g stroke=\"#444\" fill=\"none\">\n";
  svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop + plot_h) + "\" x2=\"" +
         fmt(kLeft + plot_w) + "\" y2=\"" + fmt(kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
         "\" y2=\"" + fmt(kTop + plot_h) + "\"/>\n";
  svg += "</g>\n<g fill=\"#222\">\n";
  for (int d = 0; d <= static_cast<int>(y_top); ++d) {
    const double y = kTop + plot_h - d / y_top * plot_h;
    svg += "<line x1=\"" + fmt(kLeft - 4) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kLeft + plot_w) +
           "\" y2=\"" + fmt(y) + "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(y + 4) +
           "\" text-anchor=\"end\">1e" + std::to_string(d) + "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / 4.0;
    svg += "<text x=\"" + fmt(px(xv)) + "\" y=\"" + fmt(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + std::to_string(static_cast<long long>(std::llround(xv))) +
           "</text>\n";
  }
  svg += "<text x=\"" + fmt(kLeft + plot_w / 2) + "\" y=\"" + fmt(kHeight - 15) +
         "\" text-anchor=\"middle\">frequency threshold (rows)</text>\n";
  svg += "<text transform=\"translate(20," + fmt(kTop + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">number of frequent itemsets</text>\n";
  svg += "</g>\n";

  for (const auto& s : series) {
    if (s.xy.empty()) continue;
    if (s.step) {
      std::string d = "M" + fmt(px(s.xy.front().first)) + "," + fmt(py(s.xy.front().second));
      for (std::size_t i = 1; i < s.xy.size(); ++i) {
        d += " H" + fmt(px(s.xy[i].first)) + " V" + fmt(py(s.xy[i].second));
      }
      svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"2\"/>\n";
    } else {
      svg += "<g fill=\"" + s.color + "\" fill-opacity=\"0.5\">\n";
      for (const auto& [x, y] : s.xy) {
        svg += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"1.5\"/>\n";
      }
      svg += "</g>\n";
    }
  }

  double legend_y = kTop + 10;
  for (const auto& s : series) {
    const double lx = kLeft + plot_w + 15;
    svg += "<rect x=\"" + fmt(lx) + "\" y=\"" + fmt(legend_y - 9) +
           "\" width=\"14\" height=\"10\" fill=\"" + s.color + "\"/>\n";
    svg += "<text x=\"" + fmt(lx + 20) + "\" y=\"" + fmt(legend_y) + "\">" + escape(s.label) +
           "</text>\n";
    legend_y += 18;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace freqspec::cli
