#pragma once

#include <stdexcept>
#include <string>

namespace dotshape {

// Every library failure is reported as an Error carrying one of these kinds.
// The CLI maps kinds onto exit codes; tests match on kinds, not messages.
enum class errc {
  // geometry / input data
  too_few_points,
  degenerate_input,
  duplicate_points,
  not_boundary_edge,
  not_removable,
  sequence_too_short,
  zero_dc,
  empty_selection,
  // parameters / usage
  k_too_small,
  k_exceeds_outline,
  bad_parameter,
  unknown_shape,
  // files
  io_failure,
  malformed_file,
  duplicate_name,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dotshape
