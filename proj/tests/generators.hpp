#pragma once

#include <numeric>
#include <random>

#include "cycmon/datum.hpp"

namespace cycmon::testing {

// Uniform-ish valid datum: the last exponent balances the sum, rejection
// sampling handles the connectedness and branch-count rules.
inline MonodromyDatum random_valid_datum(std::mt19937& rng, Int d_max = 12,
                                         Int gp_max = 3, Int r_max = 8) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Int d = std::uniform_int_distribution<Int>(2, d_max)(rng);
    const Int gp = std::uniform_int_distribution<Int>(0, gp_max)(rng);
    const Int r_lo = gp == 0 ? 3 : (gp == 1 ? 2 : 0);
    if (r_lo > r_max) continue;
    const Int r = std::uniform_int_distribution<Int>(r_lo, r_max)(rng);
    std::vector<Int> theta(static_cast<std::size_t>(r));
    Int sum = 0;
    for (Int i = 0; i + 1 < r; ++i) {
      theta[static_cast<std::size_t>(i)] = std::uniform_int_distribution<Int>(1, d - 1)(rng);
      sum += theta[static_cast<std::size_t>(i)];
    }
    if (r > 0) {
      const Int last = (d - sum % d) % d;
      if (last == 0) continue;
      theta[static_cast<std::size_t>(r - 1)] = last;
    }
    try {
      return validate(d, gp, std::move(theta));
    } catch (const InputError&) {
      continue;
    }
  }
  return validate(2, 1, {1, 1});
}

// Random unit of Z/d.
inline Int random_unit(std::mt19937& rng, Int d) {
  while (true) {
    const Int u = std::uniform_int_distribution<Int>(1, d - 1)(rng);
    if (std::gcd(u, d) == 1) return u;
  }
}

}  // namespace cycmon::testing
