#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "freqspec/exact.hpp"
#include "freqspec/isotonic.hpp"
#include "freqspec/run_config.hpp"
#include "freqspec/spectrum.hpp"

namespace freqspec {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

/// Result document:
///   {config:{...}, dataset:{rows,attrs}, points:[{sigma,estimate}],
///    curve:[{sigma,value}], runtime_ms}
/// `input` is the data file path when the run came from a file.
std::string spectrum_to_json(const SpectrumResult& result, const EffectiveConfig& config,
                             const std::optional<std::string>& input = std::nullopt);

/// CSV with header `kind,sigma,value`; `point` rows in path order, then
/// `curve` rows ascending in sigma.
std::string spectrum_to_csv(const SpectrumResult& result);

/// {config, dataset, exact:[{sigma,count}], histogram:[{support,count}], runtime_ms}
std::string exact_to_json(const ExactSpectrum& exact, const EffectiveConfig& config,
                          const DatasetSummary& dataset, double runtime_ms,
                          const std::optional<std::string>& input = std::nullopt);

/// CSV with header `kind,sigma,value` and one `exact` row per sigma.
std::string exact_to_csv(const ExactSpectrum& exact);

/// Drops fields that legitimately differ between otherwise identical runs
/// (runtime_ms, config.input) and re-serializes with sorted keys.
std::string canonicalize_result_json(std::string_view json_text);

/// Curve read back from a result file (CSV or JSON; estimate or exact).
struct CurveDocument {
  std::string label;  // config.command for JSON, row kind for CSV
  SpectrumCurve curve;
  double sigma_lo = 0.0;
  double sigma_hi = 0.0;
};

/// Parses `text` as a result document. JSON is detected by a leading '{'.
/// Errors are std::runtime_error naming `source` and the offending line.
CurveDocument parse_curve_document(std::string_view text, std::string_view source);

}  // namespace freqspec
