#include "cycmon/eigenspaces.hpp"

#include <string>

namespace cycmon {

EigenspaceProfile chevalley_weil(const MonodromyDatum& datum) {
  const Int d = datum.d;
  EigenspaceProfile profile;
  profile.d = d;
  profile.multiplicities.resize(static_cast<std::size_t>(d));
  for (Int i = 0; i < d; ++i) {
    // Numerator of m_{chi_i} over the common denominator d. Consecutive
    // equal exponents are grouped, which makes the usual sorted inputs with
    // long runs cheap.
    Int num = (datum.genus_base - 1) * d + (i == 0 ? d : 0);
    for (std::size_t j = 0; j < datum.theta.size();) {
      const Int t = datum.theta[j];
      std::size_t k = j + 1;
      while (k < datum.theta.size() && datum.theta[k] == t) ++k;
      num += static_cast<Int>(k - j) * ((i * t) % d);
      j = k;
    }
    if (num % d != 0) {
      throw InternalError(errc::non_integral_multiplicity,
                          "character " + std::to_string(i) + " of datum with d=" +
                              std::to_string(d) + " has non-integral multiplicity");
    }
    const Int m = num / d;
    if (m < 0) {
      throw InternalError(errc::non_integral_multiplicity,
                          "negative multiplicity at character " + std::to_string(i));
    }
    profile.multiplicities[static_cast<std::size_t>(i)] = m;
  }
  return profile;
}

bool ProfileCheckReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string ProfileCheckReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!out.empty()) out += ", ";
    out += c.rule;
  }
  return out;
}

ProfileCheckReport profile_checks(const EigenspaceProfile& profile,
                                  const MonodromyDatum& datum) {
  ProfileCheckReport report;
  const Int d = profile.d;

  {
    Int sum = 0;
    for (Int m : profile.multiplicities) sum += m;
    const Int g = total_genus(datum);
    report.checks.push_back(
        {"sum-equals-genus", sum == g,
         sum == g ? "" : "sum " + std::to_string(sum) + " != genus " + std::to_string(g)});
  }

  if (datum.genus_base >= 2) {
    bool ok = true;
    std::string detail;
    for (Int i = 0; i < d; ++i) {
      if (profile.multiplicities[static_cast<std::size_t>(i)] < 1) {
        ok = false;
        detail = "m_" + std::to_string(i) + " = 0 with base genus >= 2";
        break;
      }
    }
    report.checks.push_back({"positive-for-base-genus-2", ok, detail});
  }

  if (datum.genus_base == 1) {
    bool ok = true;
    std::string detail;
    for (Int i = 1; i < d; ++i) {
      const Int mi = profile.multiplicities[static_cast<std::size_t>(i)];
      const Int mc = profile.multiplicities[static_cast<std::size_t>((d - i) % d)];
      if (mi == 0 && mc != 0) {
        ok = false;
        detail = "m_" + std::to_string(i) + " = 0 but conjugate m_" +
                 std::to_string((d - i) % d) + " = " + std::to_string(mc);
        break;
      }
    }
    report.checks.push_back({"conjugate-pairing-genus-1", ok, detail});
  }

  return report;
}

}  // namespace cycmon
