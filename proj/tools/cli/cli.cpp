#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "freqspec/compare.hpp"
#include "freqspec/dataset.hpp"
#include "freqspec/exact.hpp"
#include "freqspec/result_io.hpp"
#include "freqspec/spectrum.hpp"
#include "json.hpp"
#include "svg_plot.hpp"

namespace freqspec::cli {

namespace {

TransactionDatabase load_input(const std::filesystem::path& path) {
  if (path.empty()) throw UserError("--input is required");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw UserError("input file '" + path.string() + "' does not exist or is not a file");
  }
  try {
    return load_fimi_file(path);
  } catch (const ParseError& e) {
    throw UserError(path.string() + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UserError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw UserError("error while writing '" + path.string() + "'");
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output) {
    write_text_file(*config.output, text);
  } else {
    out << text;
  }
}

std::vector<std::pair<double, double>> curve_xy(const SpectrumCurve& curve) {
  std::vector<std::pair<double, double>> xy;
  for (std::size_t i = 0; i < curve.size(); ++i) xy.emplace_back(curve.breakpoints[i], curve.levels[i]);
  return xy;
}

int run_sampling(const RunConfig& config, RunKind kind, std::ostream& out, std::ostream& err) {
  const TransactionDatabase loaded = load_input(config.input);
  const EffectiveConfig effective = resolve_config(kind, config.params, loaded.n_rows());

  const auto start = std::chrono::steady_clock::now();
  std::optional<TransactionDatabase> randomized;
  if (kind == RunKind::baseline) {
    randomized = randomize_marginals(loaded, effective.query.master_seed);
  }
  const TransactionDatabase& db = randomized ? *randomized : loaded;
  SpectrumResult result = estimate_spectrum(db, effective.query, ExecutionOptions{config.threads});
  result.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  emit(config,
       config.format == OutputFormat::json
           ? spectrum_to_json(result, effective, config.input.string())
           : spectrum_to_csv(result),
       out);

  if (config.plot) {
    std::vector<PlotSeries> series;
    PlotSeries points{"sampled paths", kPointColor, {}, false};
    for (const auto& p : result.points) points.xy.emplace_back(static_cast<double>(p.sigma), p.estimate);
    series.push_back(std::move(points));
    series.push_back({std::string(to_string(kind)),
                      kind == RunKind::baseline ? kBaselineColor : kEstimateColor,
                      curve_xy(result.curve), true});
    write_text_file(*config.plot, render_svg(series, config.input.filename().string() + " (" +
                                                         std::string(to_string(kind)) + ")"));
  }

  const SpectrumQuery& q = effective.query;
  err << to_string(kind) << ": rows=" << loaded.n_rows() << " attrs=" << loaded.n_attrs()
      << " paths=" << q.n_paths << " sigma=[" << q.sigma_min << "," << q.sigma_max
      << "] seed=" << q.master_seed << " wall_ms=" << format_number(std::round(result.runtime_ms))
      << "\n";
  return exit_code::kOk;
}

}  // namespace

int run_estimate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_sampling(config, RunKind::estimate, out, err);
}

int run_baseline(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_sampling(config, RunKind::baseline, out, err);
}

int run_exact(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const TransactionDatabase db = load_input(config.input);
  const EffectiveConfig effective = resolve_config(RunKind::exact, config.params, db.n_rows());

  const auto start = std::chrono::steady_clock::now();
  const ExactSpectrum exact = exact_spectrum(db, effective.query.sigma_min, effective.exact_cap,
                                             effective.query.include_empty_set);
  const double runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  emit(config,
       config.format == OutputFormat::json
           ? exact_to_json(exact, effective, {db.n_rows(), db.n_attrs()}, runtime_ms,
                           config.input.string())
           : exact_to_csv(exact),
       out);

  if (config.plot) {
    const std::vector<PlotSeries> series{{"exact", kExactColor, curve_xy(exact.as_curve()), true}};
    write_text_file(*config.plot, render_svg(series, config.input.filename().string() + " (exact)"));
  }
  err << "exact: rows=" << db.n_rows() << " attrs=" << db.n_attrs() << " sigma_min="
      << effective.query.sigma_min << " itemsets=" << exact.total()
      << " wall_ms=" << format_number(std::round(runtime_ms)) << "\n";
  return exit_code::kOk;
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.curve_files.size() != 2) throw UserError("compare needs exactly two curve files");
  std::vector<CurveDocument> docs;
  for (const auto& path : config.curve_files) {
    try {
      docs.push_back(parse_curve_document(read_text_file(path), path.string()));
    } catch (const UserError&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw UserError(e.what());
    }
  }
  const CurveDocument& a = docs[0];
  const CurveDocument& b = docs[1];

  const double lo = std::max(a.sigma_lo, b.sigma_lo);
  const double hi = std::min(a.sigma_hi, b.sigma_hi);
  if (lo > hi) throw UserError("the two curves have no sigma range in common");
  if (a.sigma_lo != b.sigma_lo || a.sigma_hi != b.sigma_hi) {
    err << "warning: sigma domains differ ([" << format_number(a.sigma_lo) << ","
        << format_number(a.sigma_hi) << "] vs [" << format_number(b.sigma_lo) << ","
        << format_number(b.sigma_hi) << "]); comparing on the overlap [" << format_number(lo)
        << "," << format_number(hi) << "]\n";
  }
  const auto first = static_cast<std::size_t>(std::ceil(lo));
  const auto last = static_cast<std::size_t>(std::floor(hi));
  if (first > last) throw UserError("the overlapping sigma range contains no integer threshold");
  std::vector<double> grid;
  if (config.grid_points) {
    if (*config.grid_points == 0) throw UserError("--grid-points must be >= 1");
    grid = integer_grid(first, last, *config.grid_points);
  } else {
    for (std::size_t s = first; s <= last; ++s) grid.push_back(static_cast<double>(s));
  }

  const auto rows = compare_curves(a.curve, b.curve, grid);
  const double median = median_error(rows);
  const double worst = max_error(rows);

  std::string text;
  if (config.format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["inputs"] = {config.curve_files[0].string(), config.curve_files[1].string()};
    doc["overlap"] = {lo, hi};
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      jrows.push_back({{"sigma", r.sigma}, {"value", r.value}, {"reference", r.reference},
                       {"log10_error", r.error}});
    }
    doc["rows"] = std::move(jrows);
    doc["median_log10_error"] = median;
    doc["max_log10_error"] = worst;
    text = doc.dump(1) + "\n";
  } else {
    text = "sigma,value,reference,log10_error\n";
    for (const auto& r : rows) {
      text += format_number(r.sigma) + "," + format_number(r.value) + "," +
              format_number(r.reference) + "," + format_number(r.error) + "\n";
    }
  }
  emit(config, text, out);

  if (config.plot) {
    auto color_for = [](const std::string& label, const char* fallback) {
      if (label == "exact") return std::string(kExactColor);
      if (label == "baseline") return std::string(kBaselineColor);
      return std::string(fallback);
    };
    const std::vector<PlotSeries> series{
        {config.curve_files[0].filename().string(), color_for(a.label, kEstimateColor),
         curve_xy(a.curve), true},
        {config.curve_files[1].filename().string(), color_for(b.label, "#d62728"),
         curve_xy(b.curve), true}};
    write_text_file(*config.plot, render_svg(series, "comparison"));
  }
  err << "compare: points=" << rows.size() << " median_log10_error=" << format_number(median)
      << " max_log10_error=" << format_number(worst) << "\n";
  return exit_code::kOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::estimate:
        return run_estimate(config, out, err);
      case Command::baseline:
        return run_baseline(config, out, err);
      case Command::exact:
        return run_exact(config, out, err);
      case Command::compare:
        return run_compare(config, out, err);
    }
    return exit_code::kInternalError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kCapExceeded;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUserError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUserError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kInternalError;
  }
}

namespace {

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw UserError("expected true or false, got '" + text + "'");
}

unsigned parse_threads(const std::string& text) {
  if (text == "auto") return 0;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used == text.size() && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw UserError("--threads expects a positive integer or 'auto', got '" + text + "'");
}

struct FlagValues {
  std::string input;
  std::vector<std::string> files;
  std::optional<std::size_t> paths;
  std::optional<std::size_t> sigma_min;
  std::optional<std::size_t> sigma_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> exact_cap;
  std::optional<std::size_t> grid_points;
  std::string format = "csv";
  std::string plot;
  std::string output;
  std::string include_empty = "true";
  std::string threads = "auto";
  std::string fit_space = "linear";
};

void add_common(CLI::App* cmd, FlagValues& v) {
  cmd->add_option("--format", v.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--plot", v.plot, "Also write a static SVG chart to this path");
  cmd->add_option("--output,-o", v.output, "Write the result here instead of stdout");
}

void add_data_flags(CLI::App* cmd, FlagValues& v) {
  cmd->add_option("--input", v.input, "FIMI dataset")->required();
  cmd->add_option("--sigma-min", v.sigma_min, "Smallest threshold (rows)");
  cmd->add_option("--include-empty-set", v.include_empty,
                  "Count the empty itemset (true|false)");
  cmd->add_option("--exact-cap", v.exact_cap, "Abort exact enumeration beyond this many itemsets");
}

void add_sampling_flags(CLI::App* cmd, FlagValues& v) {
  cmd->add_option("--paths", v.paths, "Number of sampled paths");
  cmd->add_option("--sigma-max", v.sigma_max, "Largest threshold (rows)");
  cmd->add_option("--seed", v.seed, "Master seed");
  cmd->add_option("--threads", v.threads, "Worker threads, or auto");
  cmd->add_option("--fit-space", v.fit_space, "Isotonic fit on raw (linear) or log10 values")
      ->check(CLI::IsMember({"linear", "log10"}));
}

}  // namespace

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Estimate the pattern frequency spectrum of a FIMI dataset"};
  app.require_subcommand(1);
  FlagValues v;

  auto* estimate = app.add_subcommand("estimate", "Estimate the spectrum from sampled lattice paths");
  add_data_flags(estimate, v);
  add_sampling_flags(estimate, v);
  add_common(estimate, v);

  auto* baseline = app.add_subcommand(
      "baseline", "Estimate the spectrum of a column-marginal-preserving randomization");
  add_data_flags(baseline, v);
  add_sampling_flags(baseline, v);
  add_common(baseline, v);

  auto* exact = app.add_subcommand("exact", "Enumerate the exact spectrum for sigma >= sigma-min");
  add_data_flags(exact, v);
  add_common(exact, v);

  auto* compare = app.add_subcommand("compare", "Per-sigma log10 error between two curve files");
  compare->add_option("files", v.files, "Two result files (CSV or JSON)")->required()->expected(2);
  compare->add_option("--grid-points", v.grid_points, "Evenly spaced thresholds to compare");
  add_common(compare, v);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUserError;
  }

  RunConfig config;
  try {
    if (estimate->parsed()) config.command = Command::estimate;
    if (baseline->parsed()) config.command = Command::baseline;
    if (exact->parsed()) config.command = Command::exact;
    if (compare->parsed()) config.command = Command::compare;

    config.input = v.input;
    for (const auto& f : v.files) config.curve_files.emplace_back(f);
    config.params.sigma_min = v.sigma_min;
    config.params.sigma_max = v.sigma_max;
    config.params.n_paths = v.paths;
    config.params.seed = v.seed;
    config.params.exact_cap = v.exact_cap;
    config.params.include_empty_set = parse_bool(v.include_empty);
    config.params.fit_space = fit_space_from_string(v.fit_space);
    config.format = v.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (!v.plot.empty()) config.plot = v.plot;
    if (!v.output.empty()) config.output = v.output;
    config.threads = parse_threads(v.threads);
    config.grid_points = v.grid_points;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUserError;
  }
  return run(config, out, err);
}

}  // namespace freqspec::cli
