#pragma once

#include <stdexcept>
#include <string>

namespace blanc {

/// Reasons a domain operation can reject its input.
enum class Errc {
  malformed_rational,
  zero_denominator,
  invalid_argument,
  wrong_vertex_count,
  nonzero_endpoint,
  zero_generator,
  base_not_multiple,
  index_out_of_range,
  not_on_lattice,
  empty_interval,
  interval_out_of_range,
  level_cap_exceeded,
  term_cap_exceeded,
  empty_sample_set,
  invalid_samples,
  unachievable_tolerance,
  io_error,
};

const char* to_string(Errc code) noexcept;

/// Rejected input or unreachable precondition. Maps to CLI exit code 2.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// A mathematical identity that must hold exactly was found violated.
/// Always a bug in this library; maps to CLI exit code 3.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace blanc
