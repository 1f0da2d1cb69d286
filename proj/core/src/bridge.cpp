#include "freqspec/bridge.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "freqspec/dataset.hpp"
#include "freqspec/exact.hpp"
#include "freqspec/result_io.hpp"
#include "freqspec/run_config.hpp"
#include "freqspec/spectrum.hpp"
#include "json.hpp"

namespace freqspec {

using nlohmann::ordered_json;

namespace {

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::optional<std::uint64_t> unsigned_field(const ordered_json& config, const char* key) {
  if (!config.contains(key) || config[key].is_null()) return std::nullopt;
  const ordered_json& v = config[key];
  if (!v.is_number_unsigned()) {
    throw ValidationError(std::string("config.") + key + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

RunParameters parameters_from(const ordered_json& config) {
  if (!config.is_object()) throw ValidationError("config must be an object");
  RunParameters p;
  p.sigma_min = unsigned_field(config, "sigma_min");
  p.sigma_max = unsigned_field(config, "sigma_max");
  p.n_paths = unsigned_field(config, "paths");
  p.seed = unsigned_field(config, "seed");
  p.exact_cap = unsigned_field(config, "exact_cap");
  if (config.contains("include_empty_set")) {
    if (!config["include_empty_set"].is_boolean()) {
      throw ValidationError("config.include_empty_set must be a boolean");
    }
    p.include_empty_set = config["include_empty_set"].get<bool>();
  }
  if (config.contains("fit_space")) {
    if (!config["fit_space"].is_string()) throw ValidationError("config.fit_space must be a string");
    try {
      p.fit_space = fit_space_from_string(config["fit_space"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }
  return p;
}

ordered_json error_message(const ordered_json& id, std::string_view kind, const std::string& what,
                           std::optional<std::size_t> line = std::nullopt) {
  ordered_json err{{"kind", kind}, {"message", what}};
  if (line) err["line"] = *line;
  return ordered_json{{"type", "error"}, {"id", id}, {"error", std::move(err)}};
}

}  // namespace

void Bridge::handle(std::string_view request_json, const Emit& emit) {
  cancel_requested_.store(false);
  ordered_json id = nullptr;
  try {
    ordered_json request;
    try {
      request = ordered_json::parse(request_json);
    } catch (const ordered_json::parse_error& e) {
      emit(error_message(id, "validation", std::string("request is not valid JSON: ") + e.what())
               .dump());
      return;
    }
    if (!request.is_object()) throw ValidationError("request must be a JSON object");
    if (request.contains("id")) id = request["id"];

    if (!request.contains("op") || !request["op"].is_string()) {
      throw ValidationError("request.op must be one of load, estimate, baseline, exact");
    }
    const std::string op = request["op"].get<std::string>();
    if (op != "load" && op != "estimate" && op != "baseline" && op != "exact") {
      throw ValidationError("unknown op '" + op + "'");
    }
    if (!request.contains("fimi") || !request["fimi"].is_string()) {
      throw ValidationError("request.fimi must hold the dataset as FIMI text");
    }
    std::size_t chunk = options_.progress_every;
    if (auto every = unsigned_field(request, "progress_every")) chunk = *every;
    chunk = std::max<std::size_t>(chunk, 1);

    const ordered_json config_in =
        request.contains("config") ? request["config"] : ordered_json::object();
    const RunParameters params = parameters_from(config_in);

    const TransactionDatabase db = parse_fimi_text(request["fimi"].get_ref<const std::string&>());
    const RunKind kind = op == "load" ? RunKind::estimate : run_kind_from_string(op);
    const EffectiveConfig config = resolve_config(kind, params, db.n_rows());
    const DatasetSummary summary{db.n_rows(), db.n_attrs()};

    ordered_json request_echo{{"op", op}, {"fimi_bytes", request["fimi"].get_ref<const std::string&>().size()}};

    if (op == "load") {
      // Defaults a UI should pre-fill once a dataset is loaded.
      request_echo["config"] = ordered_json{{"sigma_min", config.query.sigma_min},
                                            {"sigma_max", config.query.sigma_max},
                                            {"paths", config.query.n_paths},
                                            {"seed", config.query.master_seed},
                                            {"include_empty_set", config.query.include_empty_set},
                                            {"fit_space", to_string(config.query.fit_space)},
                                            {"exact_cap", config.exact_cap}};
      ordered_json result{{"dataset", {{"rows", summary.n_rows}, {"attrs", summary.n_attrs}}}};
      emit(ordered_json{{"type", "result"}, {"id", id}, {"request", request_echo}, {"result", result}}
               .dump());
      return;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
    };

    std::string document;
    if (kind == RunKind::exact) {
      const ExactSpectrum exact =
          exact_spectrum(db, config.query.sigma_min, config.exact_cap, config.query.include_empty_set);
      document = exact_to_json(exact, config, summary, elapsed_ms());
    } else {
      check_query_against(db, config.query);
      std::optional<TransactionDatabase> randomized;
      if (kind == RunKind::baseline) randomized = randomize_marginals(db, config.query.master_seed);
      const TransactionDatabase& target = randomized ? *randomized : db;

      SpectrumResult result;
      result.query = config.query;
      result.dataset = summary;
      const std::size_t total = config.query.n_paths;
      result.points.resize(total);
      for (std::size_t done = 0; done < total;) {
        if (cancel_requested_.load()) {
          emit(ordered_json{{"type", "cancelled"}, {"id", id}, {"completed", done}, {"total", total}}
                   .dump());
          return;
        }
        const std::size_t n = std::min(chunk, total - done);
        sample_points(target, config.query, done + 1,
                      std::span<EstimatePoint>(result.points).subspan(done, n));
        done += n;
        emit(ordered_json{{"type", "progress"}, {"id", id}, {"completed", done}, {"total", total}}
                 .dump());
      }
      result.curve = fit_spectrum(result.points, config.query.fit_space);
      result.runtime_ms = elapsed_ms();
      document = spectrum_to_json(result, config);
    }

    request_echo["config"] = ordered_json::parse(document)["config"];
    emit(ordered_json{{"type", "result"},
                      {"id", id},
                      {"request", std::move(request_echo)},
                      {"result", ordered_json::parse(document)}}
             .dump());
  } catch (const ParseError& e) {
    emit(error_message(id, "parse", e.what(),
                       e.line() > 0 ? std::optional<std::size_t>(e.line()) : std::nullopt)
             .dump());
  } catch (const CapExceeded& e) {
    emit(error_message(id, "cap_exceeded", e.what()).dump());
  } catch (const std::invalid_argument& e) {
    emit(error_message(id, "validation", e.what()).dump());
  } catch (const std::exception& e) {
    emit(error_message(id, "internal", e.what()).dump());
  } catch (...) {
    emit(error_message(id, "internal", "unknown error").dump());
  }
}

}  // namespace freqspec

extern "C" int freqspec_bridge_handle(const char* request_json,
                                      void (*emit)(const char* message, void* context),
                                      void* context) {
  freqspec::Bridge bridge;
  bool ok = false;
  try {
    bridge.handle(request_json ? request_json : "", [&](const std::string& message) {
      ok = message.rfind("{\"type\":\"result\"", 0) == 0;
      if (emit) emit(message.c_str(), context);
    });
  } catch (...) {
    // emit callbacks that throw end the request.
    return 1;
  }
  return ok ? 0 : 1;
}
