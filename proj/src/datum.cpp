#include "cycmon/datum.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cycmon {

Int reduce_exponent(Int value, Int d) {
  Int r = value % d;
  return r < 0 ? r + d : r;
}

MonodromyDatum validate(Int d, Int genus_base, std::vector<Int> theta) {
  if (d < 2 || d > kMaxOrder) {
    throw InputError(errc::invalid_order,
                     "group order d must lie in [2, " + std::to_string(kMaxOrder) +
                         "], got " + std::to_string(d));
  }
  if (genus_base < 0 || genus_base > kMaxBaseGenus) {
    throw InputError(errc::invalid_genus,
                     "base genus must be a nonnegative integer, got " +
                         std::to_string(genus_base));
  }
  if (static_cast<Int>(theta.size()) > kMaxBranchPoints) {
    throw InputError(errc::invalid_exponent, "too many branch points");
  }

  Int sum_mod = 0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const Int t = theta[i];
    if (t < 1 || t > d - 1) {
      throw InputError(errc::invalid_exponent,
                       "theta[" + std::to_string(i) + "] = " + std::to_string(t) +
                           " is 0 mod d or out of range [1, d-1]");
    }
    sum_mod = (sum_mod + t) % d;
  }
  if (sum_mod != 0) {
    throw InputError(errc::nonzero_sum,
                     "exponent sum is " + std::to_string(sum_mod) +
                         " mod " + std::to_string(d) +
                         "; no abelian cover has this branching");
  }

  const Int r = static_cast<Int>(theta.size());
  if (genus_base == 0) {
    Int g = d;
    for (Int t : theta) g = std::gcd(g, t);
    if (g != 1) {
      throw InputError(errc::not_generating,
                       "gcd(theta, d) = " + std::to_string(g) +
                           "; the covering curve is disconnected");
    }
    if (r < 3) {
      throw InputError(errc::too_few_branch_points,
                       "genus-0 base needs at least 3 branch points, got " +
                           std::to_string(r));
    }
  } else if (genus_base == 1 && r == 0) {
    throw InputError(errc::too_few_branch_points,
                     "unramified covers are only admitted over base genus >= 2");
  }

  return MonodromyDatum{d, genus_base, std::move(theta)};
}

std::vector<Int> canonical_theta(Int d, std::vector<Int> theta) {
  std::sort(theta.begin(), theta.end());
  std::vector<Int> best = theta;
  std::vector<Int> image(theta.size());
  for (Int u = 2; u < d; ++u) {
    if (std::gcd(u, d) != 1) continue;
    for (std::size_t i = 0; i < theta.size(); ++i) image[i] = (u * theta[i]) % d;
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  return best;
}

CanonicalDatum canonicalize(const MonodromyDatum& datum) {
  return CanonicalDatum{
      MonodromyDatum{datum.d, datum.genus_base, canonical_theta(datum.d, datum.theta)}};
}

bool is_canonical(const MonodromyDatum& datum) {
  if (!std::is_sorted(datum.theta.begin(), datum.theta.end())) return false;
  return canonical_theta(datum.d, datum.theta) == datum.theta;
}

Int total_genus(const MonodromyDatum& datum) {
  Int branching = 0;
  for (Int t : datum.theta) branching += datum.d - std::gcd(t, datum.d);
  const Int two_g_minus_2 = datum.d * (2 * datum.genus_base - 2) + branching;
  if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2) {
    throw InternalError(errc::invalid_genus,
                        "Riemann-Hurwitz gave 2g-2 = " + std::to_string(two_g_minus_2));
  }
  return (two_g_minus_2 + 2) / 2;
}

Int family_dimension(const MonodromyDatum& datum) {
  const Int r = datum.branch_count();
  if (datum.genus_base >= 2) return 3 * datum.genus_base - 3 + r;
  if (datum.genus_base == 1) return r;
  return r - 3;
}

bool datum_less(const MonodromyDatum& a, const MonodromyDatum& b) {
  if (a.d != b.d) return a.d < b.d;
  if (a.genus_base != b.genus_base) return a.genus_base < b.genus_base;
  return std::lexicographical_compare(a.theta.begin(), a.theta.end(),
                                      b.theta.begin(), b.theta.end());
}

}  // namespace cycmon
