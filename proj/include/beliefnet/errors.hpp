#pragma once

#include <stdexcept>
#include <string>

namespace beliefnet {

// Error categories shared across the library and mirrored one-to-one by the
// C API status codes in beliefnet.h. Keep the numeric values stable.
enum class errc {
  ok = 0,
  invalid_argument = 1,
  reducible = 2,
  non_convergent = 3,
  numerical_failure = 4,
  unknown_signal = 5,
  dimension_mismatch = 6,
  domain_error = 7,
  invalid_network = 8,
  not_identifiable = 9,
  complex_spectrum = 10,
  not_symmetric = 11,
  no_such_edge = 12,
  generation_failed = 13,
  unsupported = 14,
  io_error = 15,
  internal = 16,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::ok: return "ok";
    case errc::invalid_argument: return "invalid_argument";
    case errc::reducible: return "reducible";
    case errc::non_convergent: return "non_convergent";
    case errc::numerical_failure: return "numerical_failure";
    case errc::unknown_signal: return "unknown_signal";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::domain_error: return "domain_error";
    case errc::invalid_network: return "invalid_network";
    case errc::not_identifiable: return "not_identifiable";
    case errc::complex_spectrum: return "complex_spectrum";
    case errc::not_symmetric: return "not_symmetric";
    case errc::no_such_edge: return "no_such_edge";
    case errc::generation_failed: return "generation_failed";
    case errc::unsupported: return "unsupported";
    case errc::io_error: return "io_error";
    case errc::internal: return "internal";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace beliefnet
