#pragma once

#include <string>
#include <vector>

#include "cycmon/datum.hpp"

namespace cycmon {

// The Chevalley-Weil multiplicities of a datum: multiplicities[i] is the
// dimension of the chi_i-eigenspace of the Z/d-action on holomorphic
// one-forms, where chi_i sends the fixed generator to xi^i for a fixed
// primitive d-th root of unity xi. The conjugate of chi_i is chi_{d-i mod d}.
struct EigenspaceProfile {
  Int d = 2;
  std::vector<Int> multiplicities;

  bool operator==(const EigenspaceProfile&) const = default;
};

// Evaluates the Chevalley-Weil formula
//   m_{chi_i} = (g' - 1) + sum_j [i * theta_j]_d / d + (i == 0 ? 1 : 0)
// in exact integer arithmetic ([a]_d is the representative in {0,...,d-1}).
// A non-integral sum means a corrupted datum slipped past validation and is
// reported as InternalError(NonIntegralMultiplicity), never rounded.
EigenspaceProfile chevalley_weil(const MonodromyDatum& datum);

struct ProfileCheck {
  std::string rule;
  bool passed = true;
  std::string detail;
};

struct ProfileCheckReport {
  std::vector<ProfileCheck> checks;

  bool all_passed() const;
  // Rule names of the failing entries, comma separated (empty if none).
  std::string failures() const;
};

// Structural consistency of a profile against its originating datum:
//   sum-equals-genus            sum of m_i equals the total genus,
//   positive-for-base-genus-2   g' >= 2 forces every m_i >= 1,
//   conjugate-pairing-genus-1   g' = 1 and m_i = 0 force m_{d-i} = 0.
// Failures indicate an implementation bug, so they come back as report
// entries rather than exceptions.
ProfileCheckReport profile_checks(const EigenspaceProfile& profile,
                                  const MonodromyDatum& datum);

}  // namespace cycmon
