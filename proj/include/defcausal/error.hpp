#pragma once

#include <stdexcept>
#include <string>

namespace defcausal {

// Stable error identifiers. Pipeline report cells carry these codes so that
// failed estimations stay machine-readable instead of turning into free text.
enum class errc {
  malformed_row,
  non_finite_score,
  missing_model_pred,
  missing_human_pred,
  unknown_label,
  scenario_unavailable,
  insufficient_data,
  insufficient_support,
  singular_fit,
  bad_argument,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_row: return "malformed_row";
    case errc::non_finite_score: return "non_finite_score";
    case errc::missing_model_pred: return "missing_model_pred";
    case errc::missing_human_pred: return "missing_human_pred";
    case errc::unknown_label: return "unknown_label";
    case errc::scenario_unavailable: return "scenario_unavailable";
    case errc::insufficient_data: return "insufficient_data";
    case errc::insufficient_support: return "insufficient_support";
    case errc::singular_fit: return "singular_fit";
    case errc::bad_argument: return "bad_argument";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace defcausal
