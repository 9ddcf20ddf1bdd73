#include "cycmon/reference.hpp"

#include <algorithm>
#include <numeric>

namespace cycmon {

bool orbit_equivalent(const MonodromyDatum& a, const MonodromyDatum& b) {
  if (a.d != b.d || a.genus_base != b.genus_base) return false;
  if (a.theta.size() != b.theta.size()) return false;
  std::vector<Int> lhs = b.theta;
  std::sort(lhs.begin(), lhs.end());
  std::vector<Int> image(a.theta.size());
  for (Int u = 1; u < a.d; ++u) {
    if (std::gcd(u, a.d) != 1) continue;
    for (std::size_t i = 0; i < a.theta.size(); ++i)
      image[i] = (u * a.theta[i]) % a.d;
    std::sort(image.begin(), image.end());
    if (image == lhs) return true;
  }
  return false;
}

std::vector<MonodromyDatum> reference_enumerate(const SearchBounds& bounds) {
  std::vector<MonodromyDatum> kept;

  const Int d_lo = bounds.d_fixed.value_or(2);
  const Int d_hi = bounds.d_fixed.value_or(bounds.d_max);
  const Int gp_lo = bounds.genus_base_fixed.value_or(0);
  const Int gp_hi = bounds.genus_base_fixed.value_or(bounds.genus_base_max);

  for (Int d = d_lo; d <= d_hi; ++d) {
    // Every branch point adds at least d minus the largest proper divisor
    // to 2g - 2, which bounds r over the genus window.
    Int max_div = 1;
    for (Int e = 1; e < d; ++e)
      if (d % e == 0) max_div = e;
    const Int wmin = d - max_div;

    for (Int gp = gp_lo; gp <= gp_hi; ++gp) {
      const Int budget = 2 * bounds.genus_max - 2 - d * (2 * gp - 2);
      if (budget < 0) continue;
      const Int r_hi = budget / wmin;
      for (Int r = 0; r <= r_hi; ++r) {
        // All sorted tuples of length r over {1, ..., d-1}.
        std::vector<Int> theta(static_cast<std::size_t>(r), 1);
        const auto consider = [&]() {
          MonodromyDatum candidate;
          try {
            candidate = validate(d, gp, theta);
          } catch (const InputError&) {
            return;
          }
          const Int g = total_genus(candidate);
          if (g < bounds.genus_min || g > bounds.genus_max) return;
          for (const auto& c : kept)
            if (orbit_equivalent(c, candidate)) return;
          kept.push_back(std::move(candidate));
        };
        if (r == 0) {
          consider();
          continue;
        }
        while (true) {
          consider();
          // next sorted tuple
          Int pos = r - 1;
          while (pos >= 0 && theta[static_cast<std::size_t>(pos)] == d - 1) --pos;
          if (pos < 0) break;
          const Int v = theta[static_cast<std::size_t>(pos)] + 1;
          for (Int k = pos; k < r; ++k) theta[static_cast<std::size_t>(k)] = v;
        }
      }
    }
  }

  std::sort(kept.begin(), kept.end(), datum_less);
  return kept;
}

}  // namespace cycmon
