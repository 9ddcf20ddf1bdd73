#include "cycmon/degeneration.hpp"

#include <algorithm>

#include "cycmon/eigenspaces.hpp"

namespace cycmon {

DegenerationResult delta0_degenerate(const MonodromyDatum& datum) {
  if (datum.genus_base < 1) {
    throw InputError(errc::base_genus_zero,
                     "the base curve has no handle to pinch");
  }

  std::vector<Int> theta = datum.theta;
  theta.push_back(1);
  theta.push_back(datum.d - 1);  // -1 stored in {1, ..., d-1}
  std::sort(theta.begin(), theta.end());

  DegenerationResult result;
  result.normalized = validate(datum.d, datum.genus_base - 1, std::move(theta));

  const Int g = total_genus(datum);
  const Int g_normalized = total_genus(result.normalized);
  result.genus_drop = g - g_normalized;
  result.prym_dim = g - datum.genus_base;
  if (result.genus_drop != 1 ||
      result.prym_dim != g_normalized - result.normalized.genus_base) {
    throw InternalError(errc::invalid_genus,
                        "degeneration changed the Prym dimension");
  }
  return result;
}

bool check_profile_preservation(const MonodromyDatum& datum) {
  const auto degenerated = delta0_degenerate(datum);
  const auto before = chevalley_weil(datum);
  const auto after = chevalley_weil(degenerated.normalized);
  for (Int i = 1; i < datum.d; ++i) {
    if (before.multiplicities[static_cast<std::size_t>(i)] !=
        after.multiplicities[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

Int prym_dimension(const MonodromyDatum& datum) {
  return total_genus(datum) - datum.genus_base;
}

}  // namespace cycmon
