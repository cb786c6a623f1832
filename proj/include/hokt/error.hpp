#pragma once

#include <stdexcept>
#include <string>

namespace hokt {

// Error categories surfaced by the library. The CLI maps each category to a
// machine-parseable code on stderr.
enum class ErrorCode {
  input,       // malformed caller input (bad edge list, uncovered node, ...)
  config,      // invalid configuration (weights, schedules, probabilities)
  metric,      // metric undefined for the given input (e.g. m = 0)
  io,          // filesystem / parsing failures
  generation,  // infeasible benchmark spec
  internal,    // broken internal invariant
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::input: return "input";
    case ErrorCode::config: return "config";
    case ErrorCode::metric: return "metric";
    case ErrorCode::io: return "io";
    case ErrorCode::generation: return "generation";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline Error input_error(const std::string& m) { return Error(ErrorCode::input, m); }
inline Error config_error(const std::string& m) { return Error(ErrorCode::config, m); }
inline Error metric_error(const std::string& m) { return Error(ErrorCode::metric, m); }
inline Error io_error(const std::string& m) { return Error(ErrorCode::io, m); }
inline Error generation_error(const std::string& m) { return Error(ErrorCode::generation, m); }
inline Error internal_error(const std::string& m) { return Error(ErrorCode::internal, m); }

}  // namespace hokt
