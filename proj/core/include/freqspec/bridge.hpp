#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace freqspec {

struct BridgeOptions {
  /// Paths per chunk; one progress message is emitted per completed chunk.
  std::size_t progress_every = 100;
};

/// Plain-text message boundary around the core pipeline, meant for hosts
/// that cannot share C++ objects (a browser worker, a scripting runtime).
///
/// Request (JSON):
///   {"id": any, "op": "load" | "estimate" | "baseline" | "exact",
///    "fimi": "<FIMI text>",
///    "config": {"sigma_min", "sigma_max", "paths", "seed",
///               "include_empty_set", "fit_space", "exact_cap"},
///    "progress_every": n}
///
/// Responses (JSON, one per emit call):
///   {"type": "progress", "id", "completed", "total"}           zero or more
///   {"type": "result", "id", "request": {...}, "result": {...}}
///   {"type": "error", "id", "error": {"kind", "message", "line"?}}
///   {"type": "cancelled", "id", "completed", "total"}
///
/// "result" is the same document the command-line tool writes with
/// --format json. Exactly one non-progress message ends every request.
class Bridge {
 public:
  using Emit = std::function<void(const std::string& message)>;

  explicit Bridge(BridgeOptions options = {}) : options_(options) {}

  /// Runs one request to completion on the calling thread. Never throws;
  /// failures become error messages.
  void handle(std::string_view request_json, const Emit& emit);

  /// Stops the running request at its next chunk boundary. Safe to call
  /// from another thread or from inside the emit callback.
  void cancel() { cancel_requested_.store(true); }

 private:
  BridgeOptions options_;
  std::atomic<bool> cancel_requested_{false};
};

}  // namespace freqspec

extern "C" {

/// C entry point for embedding hosts: runs one request on a fresh Bridge and
/// forwards every response message to `emit`. Returns 0 when the final
/// message is a result, 1 otherwise.
int freqspec_bridge_handle(const char* request_json,
                           void (*emit)(const char* message, void* context), void* context);
}
