#pragma once

#include <stdexcept>
#include <string>

namespace cycmon {

// Machine-readable failure codes. The CLI maps InputError to exit status 1
// and InternalError to exit status 3; regression failures use exit status 2
// without an exception type.
enum class errc {
  invalid_order,
  invalid_genus,
  invalid_exponent,
  nonzero_sum,
  not_generating,
  too_few_branch_points,
  base_genus_zero,
  zero_dimensional_family,
  bounds_too_large,
  schema_mismatch,
  corrupt_atlas,
  non_integral_multiplicity,
  profile_check_failed,
  dual_dimension_mismatch,
  theorem_violation,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_order: return "InvalidOrder";
    case errc::invalid_genus: return "InvalidGenus";
    case errc::invalid_exponent: return "InvalidExponent";
    case errc::nonzero_sum: return "NonzeroSum";
    case errc::not_generating: return "NotGenerating";
    case errc::too_few_branch_points: return "TooFewBranchPoints";
    case errc::base_genus_zero: return "BaseGenusZero";
    case errc::zero_dimensional_family: return "ZeroDimensionalFamily";
    case errc::bounds_too_large: return "BoundsTooLarge";
    case errc::schema_mismatch: return "SchemaMismatch";
    case errc::corrupt_atlas: return "CorruptAtlas";
    case errc::non_integral_multiplicity: return "NonIntegralMultiplicity";
    case errc::profile_check_failed: return "ProfileCheckFailed";
    case errc::dual_dimension_mismatch: return "DualDimensionMismatch";
    case errc::theorem_violation: return "TheoremViolation";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

// Rejected input: a bad datum, bad search bounds, or an unreadable atlas file.
class InputError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant. Always a bug, never a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cycmon
