#pragma once

#include <cstdint>
#include <vector>

#include "cycmon/errors.hpp"

namespace cycmon {

using Int = std::int64_t;

// Size guards. Everything downstream works in exact int64 arithmetic; these
// caps keep every derived quantity (genus, branching sums, symmetric-space
// dimensions) far away from overflow.
inline constexpr Int kMaxOrder = 1'000'000;        // cyclic group order d
inline constexpr Int kMaxBaseGenus = 1'000'000;    // quotient-curve genus g'
inline constexpr Int kMaxBranchPoints = 1'000'000; // branch point count r

// A topological type of cyclic Galois cover: the order d of the covering
// group Z/d, the genus g' of the quotient curve, and the local monodromy
// exponent theta_i in {1, ..., d-1} at each of the r branch points. The
// exponent sum is 0 mod d, and for covers of the line the exponents
// generate Z/d (otherwise the covering curve is disconnected).
struct MonodromyDatum {
  Int d = 2;
  Int genus_base = 0;
  std::vector<Int> theta;

  Int branch_count() const { return static_cast<Int>(theta.size()); }

  bool operator==(const MonodromyDatum&) const = default;
};

// Orbit-minimal representative of a datum under multiplication of theta by a
// unit of Z/d and permutation of the branch points. Two data present the same
// topological type exactly when their canonical forms coincide.
struct CanonicalDatum {
  MonodromyDatum datum;

  bool operator==(const CanonicalDatum&) const = default;
};

// Checks a raw triple and returns it as a datum. Throws InputError with code
// InvalidExponent, NonzeroSum, NotGenerating or TooFewBranchPoints (plus
// InvalidOrder / InvalidGenus for nonsensical d or g'). Exponents are taken
// verbatim: reduction of negative or oversized representatives mod d is a
// parsing concern, see parse_theta_list in io.hpp.
MonodromyDatum validate(Int d, Int genus_base, std::vector<Int> theta);

// The sorted, lexicographically minimal unit image of theta.
CanonicalDatum canonicalize(const MonodromyDatum& datum);
bool is_canonical(const MonodromyDatum& datum);

// Orbit-minimal form of a bare exponent tuple (helper shared with the
// enumeration kernels; `theta` need not be sorted).
std::vector<Int> canonical_theta(Int d, std::vector<Int> theta);

// Genus g of the covering curve, by Riemann-Hurwitz:
//   2g - 2 = d(2g' - 2) + sum_i (d - gcd(theta_i, d)).
Int total_genus(const MonodromyDatum& datum);

// Dimension of the moduli space M_{g',r} the family maps from:
// 3g'-3+r for g' >= 2, r for g' = 1, r-3 for g' = 0.
Int family_dimension(const MonodromyDatum& datum);

// Canonical sort key used everywhere output order matters:
// (d, genus_base, theta lexicographic).
bool datum_less(const MonodromyDatum& a, const MonodromyDatum& b);

// Representative of `value` mod d in {0, ..., d-1}; works for negatives.
Int reduce_exponent(Int value, Int d);

}  // namespace cycmon
