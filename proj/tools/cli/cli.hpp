#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freqspec/run_config.hpp"

namespace freqspec::cli {

enum class Command { estimate, exact, baseline, compare };
enum class OutputFormat { csv, json };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUserError = 1;
inline constexpr int kCapExceeded = 2;
inline constexpr int kInternalError = 3;
}  // namespace exit_code

/// Bad flags, missing files, malformed inputs.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::estimate;
  std::filesystem::path input;
  /// compare: the two curve files.
  std::vector<std::filesystem::path> curve_files;
  RunParameters params;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> plot;
  std::optional<std::filesystem::path> output;
  /// 0 = all hardware threads.
  unsigned threads = 0;
  /// compare: evenly spaced grid size; unset compares every integer sigma.
  std::optional<std::size_t> grid_points;
};

int run_estimate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_baseline(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_exact(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command and maps exceptions to exit codes:
/// user errors 1, exact cap exceeded 2, anything else 3.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (args[0] is the program name) and runs.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freqspec::cli
