#pragma once

#include "cycmon/group_factors.hpp"

namespace cycmon {

// The numerical specialness test: the family is special (equivalently,
// totally geodesic, under no repeating factors) iff the dimension of the
// moduli space it sweeps equals dim S(G), the dimension of the PEL special
// subvariety cut out by the group action.
struct StarReport {
  Int dim_family = 0;
  Int dim_sg = 0;
  Int dim_sg_crosscheck = 0;  // via the Sym^2 character sum; always == dim_sg
  bool holds = false;         // dim_family == dim_sg
  Int deficiency = 0;         // dim_sg - dim_family
  bool anomaly = false;       // dim_family > dim_sg: needs review

  bool operator==(const StarReport&) const = default;
};

enum class Status {
  TotallyGeodesicAndSpecial,
  NotTotallyGeodesic,
  OutsideHypotheses,  // repeating factors: the criterion does not apply
};

enum class MonodromyQualifier {
  Exact,              // no repeating factors, g' >= 1
  LowerAndUpperBound, // no repeating factors, g' = 0
  UpperBoundOnly,     // repeating factors
};

// Factor-level description of the algebraic monodromy group. `lower` and
// `upper` list the factors of the established lower and upper bounds for the
// group (equal lists when the qualifier is Exact); factors that are the
// trivial group are omitted.
struct MonodromyReport {
  MonodromyQualifier qualifier = MonodromyQualifier::UpperBoundOnly;
  std::vector<GroupFactor> lower;
  std::vector<GroupFactor> upper;

  bool operator==(const MonodromyReport&) const = default;
};

struct Verdict {
  bool no_repeating = false;
  StarReport star;
  Status status = Status::OutsideHypotheses;
  MonodromyReport monodromy;
  // dim Z is taken to be dim M_{g',r}; data whose generic member has extra
  // automorphisms could break this, and are not detected.
  bool dim_z_assumed_generic = true;
  bool su11_sp2_advisory = false;

  bool operator==(const Verdict&) const = default;
};

// Fills the star report and asserts that the two dim S(G) routes agree
// (InternalError(DualDimensionMismatch) if not). Valid for any datum,
// including rigid ones.
StarReport star_condition(const MonodromyDatum& datum);
StarReport star_condition(const MonodromyDatum& datum,
                          const EigenspaceProfile& profile,
                          const FactorList& factors);

// Full classification of a positive-dimensional family:
//   TotallyGeodesicAndSpecial  <=>  no_repeating and star.holds
//   NotTotallyGeodesic         <=>  no_repeating and not star.holds
//   OutsideHypotheses          <=>  repeating factors.
// Requires family_dimension >= 1 (InputError(ZeroDimensionalFamily)).
// A TotallyGeodesicAndSpecial outcome with total genus >= 8 contradicts the
// classification of such families and raises InternalError(TheoremViolation).
Verdict verdict(const MonodromyDatum& datum);
// Same, on precomputed pieces (scan hot path).
Verdict verdict(const MonodromyDatum& datum, const EigenspaceProfile& profile,
                const FactorList& factors);

MonodromyReport monodromy_report(const MonodromyDatum& datum);

const char* status_name(Status status);
const char* qualifier_name(MonodromyQualifier qualifier);

}  // namespace cycmon
