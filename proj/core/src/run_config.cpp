#include "freqspec/run_config.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace freqspec {

std::string_view to_string(RunKind kind) {
  switch (kind) {
    case RunKind::estimate:
      return "estimate";
    case RunKind::baseline:
      return "baseline";
    case RunKind::exact:
      return "exact";
  }
  return "estimate";
}

RunKind run_kind_from_string(std::string_view text) {
  if (text == "estimate") return RunKind::estimate;
  if (text == "baseline") return RunKind::baseline;
  if (text == "exact") return RunKind::exact;
  throw std::invalid_argument("unknown run kind '" + std::string(text) + "'");
}

EffectiveConfig resolve_config(RunKind kind, const RunParameters& params, std::size_t n_rows) {
  EffectiveConfig config;
  config.kind = kind;
  SpectrumQuery& q = config.query;

  q.sigma_min = params.sigma_min.value_or(1);
  q.sigma_max = params.sigma_max.value_or(
      std::min(n_rows, std::max(kDefaultSigmaCeiling, q.sigma_min)));
  q.n_paths = params.n_paths.value_or(kDefaultPaths);
  q.master_seed = params.seed.value_or(kDefaultSeed);
  q.include_empty_set = params.include_empty_set.value_or(true);
  q.fit_space = params.fit_space.value_or(FitSpace::linear);
  config.exact_cap = params.exact_cap.value_or(kDefaultExactCap);

  if (q.sigma_min < 1) throw std::invalid_argument("sigma-min must be >= 1");
  if (q.sigma_min > n_rows) {
    throw std::invalid_argument("sigma-min (" + std::to_string(q.sigma_min) +
                                ") exceeds the number of rows (" + std::to_string(n_rows) + ")");
  }
  if (kind == RunKind::exact) {
    if (config.exact_cap == 0) throw std::invalid_argument("exact-cap must be >= 1");
    // Exact runs always cover [sigma_min, n_rows].
    q.sigma_max = n_rows;
    return config;
  }
  if (q.sigma_max > n_rows) {
    throw std::invalid_argument("sigma-max (" + std::to_string(q.sigma_max) +
                                ") exceeds the number of rows (" + std::to_string(n_rows) +
                                "); thresholds are absolute row counts");
  }
  q.validate();
  return config;
}

}  // namespace freqspec
