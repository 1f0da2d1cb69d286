#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "freqspec/exact.hpp"
#include "freqspec/spectrum.hpp"

namespace freqspec {

enum class RunKind { estimate, baseline, exact };

std::string_view to_string(RunKind kind);
RunKind run_kind_from_string(std::string_view text);

inline constexpr std::size_t kDefaultPaths = 5000;
inline constexpr std::size_t kDefaultSigmaCeiling = 1000;
inline constexpr std::uint64_t kDefaultSeed = 0;

/// Parameters as supplied by a caller; unset fields take defaults.
struct RunParameters {
  std::optional<std::size_t> sigma_min;
  std::optional<std::size_t> sigma_max;
  std::optional<std::size_t> n_paths;
  std::optional<std::uint64_t> seed;
  std::optional<bool> include_empty_set;
  std::optional<std::uint64_t> exact_cap;
  std::optional<FitSpace> fit_space;
};

/// Fully resolved configuration; the single source of defaults shared by the
/// command-line tool and the embedding bridge.
struct EffectiveConfig {
  RunKind kind = RunKind::estimate;
  SpectrumQuery query;
  std::uint64_t exact_cap = kDefaultExactCap;

  bool operator==(const EffectiveConfig&) const = default;
};

/// Defaults: sigma_min = 1, sigma_max = min(n_rows, max(1000, sigma_min)),
/// 5000 paths, seed 0, empty set included, linear fit. Throws
/// std::invalid_argument on an invalid combination, including an explicit
/// sigma_max above n_rows. For exact runs only sigma_min, the cap and the
/// empty-set flag matter, and sigma_min must not exceed n_rows.
EffectiveConfig resolve_config(RunKind kind, const RunParameters& params, std::size_t n_rows);

}  // namespace freqspec
