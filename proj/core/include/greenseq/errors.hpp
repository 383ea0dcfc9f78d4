#pragma once

#include <stdexcept>
#include <string>

namespace greenseq {

// Exit code contract shared by the library and the CLI:
//   0 success, 1 cross-check mismatch, 2 bad input,
//   3 unsupported quiver type, 4 internal invariant violation.
enum class errc {
  // bad input (exit 2)
  parse_error,
  cyclic_quiver,
  disconnected,
  not_sink_or_source,
  unknown_preset,
  triple_not_in_catalog,
  too_many_orientations,
  capacity_exceeded,
  // unsupported type (exit 3)
  unsupported_type,
  sink_unreachable,
  // cross-check mismatch (exit 1)
  mismatch_found,
  // internal invariant violations (exit 4)
  non_unimodular,
  orbit_overflow,
  loop_overflow,
  cardinality_violation,
  sign_incoherence,
  cycle_detected,
  index_out_of_catalog,
  internal,
};

int exit_code_for(errc code);
const char* to_string(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }
  int exit_code() const { return exit_code_for(code_); }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace greenseq
