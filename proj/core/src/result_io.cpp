#include "freqspec/result_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "json.hpp"

namespace freqspec {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, ptr);
}

namespace {

ordered_json sigma_value(double sigma) {
  // Thresholds are integral; keep them integers in JSON.
  if (sigma >= 0 && std::floor(sigma) == sigma && sigma < 9.0e15) {
    return static_cast<std::uint64_t>(sigma);
  }
  return sigma;
}

ordered_json config_json(const EffectiveConfig& config, const std::optional<std::string>& input) {
  const SpectrumQuery& q = config.query;
  ordered_json c;
  c["command"] = std::string(to_string(config.kind));
  if (input) c["input"] = *input;
  c["sigma_min"] = q.sigma_min;
  c["sigma_max"] = q.sigma_max;
  if (config.kind == RunKind::exact) {
    c["exact_cap"] = config.exact_cap;
  } else {
    c["paths"] = q.n_paths;
    c["seed"] = q.master_seed;
    c["fit_space"] = std::string(to_string(q.fit_space));
  }
  c["include_empty_set"] = q.include_empty_set;
  return c;
}

ordered_json dataset_json(const DatasetSummary& d) {
  ordered_json j;
  j["rows"] = d.n_rows;
  j["attrs"] = d.n_attrs;
  return j;
}

}  // namespace

std::string spectrum_to_json(const SpectrumResult& result, const EffectiveConfig& config,
                             const std::optional<std::string>& input) {
  ordered_json doc;
  doc["config"] = config_json(config, input);
  doc["dataset"] = dataset_json(result.dataset);

  ordered_json points = ordered_json::array();
  for (const EstimatePoint& p : result.points) {
    points.push_back(ordered_json{{"sigma", p.sigma}, {"estimate", p.estimate}});
  }
  doc["points"] = std::move(points);

  ordered_json curve = ordered_json::array();
  for (std::size_t i = 0; i < result.curve.size(); ++i) {
    curve.push_back(ordered_json{{"sigma", sigma_value(result.curve.breakpoints[i])},
                                 {"value", result.curve.levels[i]}});
  }
  doc["curve"] = std::move(curve);
  doc["runtime_ms"] = result.runtime_ms;
  return doc.dump(1) + "\n";
}

std::string spectrum_to_csv(const SpectrumResult& result) {
  std::string out = "kind,sigma,value\n";
  for (const EstimatePoint& p : result.points) {
    out += "point," + std::to_string(p.sigma) + "," + format_number(p.estimate) + "\n";
  }
  for (std::size_t i = 0; i < result.curve.size(); ++i) {
    out += "curve," + format_number(result.curve.breakpoints[i]) + "," +
           format_number(result.curve.levels[i]) + "\n";
  }
  return out;
}

std::string exact_to_json(const ExactSpectrum& exact, const EffectiveConfig& config,
                          const DatasetSummary& dataset, double runtime_ms,
                          const std::optional<std::string>& input) {
  ordered_json doc;
  doc["config"] = config_json(config, input);
  doc["dataset"] = dataset_json(dataset);
  ordered_json rows = ordered_json::array();
  for (const auto& [sigma, count] : exact.spectrum()) {
    rows.push_back(ordered_json{{"sigma", sigma}, {"count", count}});
  }
  doc["exact"] = std::move(rows);
  ordered_json hist = ordered_json::array();
  const auto& h = exact.histogram();
  for (std::size_t s = 0; s < h.size(); ++s) {
    if (h[s] != 0) hist.push_back(ordered_json{{"support", s}, {"count", h[s]}});
  }
  doc["histogram"] = std::move(hist);
  doc["runtime_ms"] = runtime_ms;
  return doc.dump(1) + "\n";
}

std::string exact_to_csv(const ExactSpectrum& exact) {
  std::string out = "kind,sigma,value\n";
  for (const auto& [sigma, count] : exact.spectrum()) {
    out += "exact," + std::to_string(sigma) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string canonicalize_result_json(std::string_view json_text) {
  json doc = json::parse(json_text);
  doc.erase("runtime_ms");
  if (doc.contains("config") && doc["config"].is_object()) doc["config"].erase("input");
  return doc.dump(1) + "\n";
}

namespace {

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  std::string msg(source);
  if (line > 0) msg += ":" + std::to_string(line);
  throw std::runtime_error(msg + ": " + what);
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

double parse_double(std::string_view field, std::string_view source, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail(source, line, "not a number: '" + std::string(field) + "'");
  }
  return v;
}

void finish(CurveDocument& doc, std::vector<std::pair<double, double>>& rows,
            std::string_view source) {
  if (rows.empty()) fail(source, 0, "no curve rows found");
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].first == rows[i - 1].first) {
      fail(source, 0, "duplicate sigma " + format_number(rows[i].first) + " in curve");
    }
  }
  for (const auto& [sigma, value] : rows) {
    doc.curve.breakpoints.push_back(sigma);
    doc.curve.levels.push_back(value);
  }
  doc.sigma_lo = rows.front().first;
  doc.sigma_hi = rows.back().first;
}

CurveDocument parse_json_curve(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  CurveDocument out;
  std::vector<std::pair<double, double>> rows;
  try {
    if (doc.contains("config") && doc["config"].contains("command")) {
      out.label = doc["config"]["command"].get<std::string>();
    }
    if (doc.contains("curve")) {
      for (const auto& r : doc.at("curve")) {
        rows.emplace_back(r.at("sigma").get<double>(), r.at("value").get<double>());
      }
    } else if (doc.contains("exact")) {
      for (const auto& r : doc.at("exact")) {
        rows.emplace_back(r.at("sigma").get<double>(), r.at("count").get<double>());
      }
    } else {
      fail(source, 0, "JSON has neither a 'curve' nor an 'exact' array");
    }
  } catch (const json::exception& e) {
    fail(source, 0, std::string("unexpected JSON structure: ") + e.what());
  }
  finish(out, rows, source);
  return out;
}

CurveDocument parse_csv_curve(std::string_view text, std::string_view source) {
  CurveDocument out;
  std::vector<std::pair<double, double>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      fail(source, line_no, "expected 3 comma-separated fields");
    }
    const std::string_view kind = line.substr(0, c1);
    if (line_no == 1 && kind == "kind") continue;
    if (kind == "point") continue;
    if (kind != "curve" && kind != "exact") {
      fail(source, line_no, "unknown row kind '" + std::string(kind) + "'");
    }
    if (out.label.empty()) out.label = std::string(kind);
    rows.emplace_back(parse_double(line.substr(c1 + 1, c2 - c1 - 1), source, line_no),
                      parse_double(line.substr(c2 + 1), source, line_no));
  }
  finish(out, rows, source);
  return out;
}

}  // namespace

CurveDocument parse_curve_document(std::string_view text, std::string_view source) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) fail(source, 0, "file is empty");
  if (text[first] == '{') return parse_json_curve(text, source);
  return parse_csv_curve(text, source);
}

}  // namespace freqspec
