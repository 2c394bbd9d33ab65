#pragma once

#include <stdexcept>
#include <string>

namespace charslope {

// Failure categories, named by the contract they break.
enum class Errc {
  zero_zero,                 // slope 0/0 requested
  infinite_slope,            // finite slope required
  invalid_cable,             // cable winding |s| <= 1
  overflow,                  // 64-bit arithmetic would wrap
  non_positive_systole,
  hypothesis_not_met,        // numeric hypothesis of a bound violated
  denominator_non_positive,  // |q| too small for the core-length formula
  below_eleven,              // q_min <= 10: slope length would not exceed 2*pi
  volume_too_small,          // volume cap at or below the base volume
  invalid_torus_params,
  invalid_cable_params,
  invalid_params,
  malformed_record,
  duplicate_name,
  inconsistent_record,       // record data contradicts its own claims
  non_hyperbolic_input,
  missing_systole,
  invalid_stage,
  invalid_clasp,
  zero_parameter,
  bad_data,                  // fixture file missing or ill-formed
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace charslope
