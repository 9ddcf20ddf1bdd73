#pragma once

#include "cycmon/atlas.hpp"

namespace cycmon {

// Serial reference enumerator, kept for testing and benchmarking the cell
// kernels. It lists raw sorted exponent tuples and dedups by explicit orbit
// membership tests against everything already kept, with no canonical-form
// shortcut; representatives are first-seen tuples, so callers compare
// results up to orbit equivalence. Quadratic in the number of survivors;
// only meant for small windows.
std::vector<MonodromyDatum> reference_enumerate(const SearchBounds& bounds);

// True iff a and b differ by a unit of Z/d and a permutation of theta.
bool orbit_equivalent(const MonodromyDatum& a, const MonodromyDatum& b);

}  // namespace cycmon
