#include "cycmon/classify.hpp"

#include <string>

#include "cycmon/io.hpp"

namespace cycmon {

namespace {

// Factors of the full derived group, dropping factors that are the trivial
// group (Sp(0), SU of total rank <= 1).
std::vector<GroupFactor> der_factors(const FactorList& factors) {
  std::vector<GroupFactor> out;
  for (const auto& f : factors.factors)
    if (!f.trivial_group()) out.push_back(f);
  return out;
}

// Factors with all defining multiplicities nonzero, i.e. the positive part.
// The trivial character participates through Sp(2g') when g' > 0.
std::vector<GroupFactor> positive_factors(const FactorList& factors) {
  std::vector<GroupFactor> out;
  for (const auto& f : factors.factors)
    if (f.is_positive) out.push_back(f);
  return out;
}

MonodromyReport build_monodromy_report(const FactorList& factors, bool no_rep,
                                       Int genus_base) {
  MonodromyReport report;
  if (!no_rep) {
    report.qualifier = MonodromyQualifier::UpperBoundOnly;
    report.upper = der_factors(factors);
  } else if (genus_base >= 1) {
    // With a positive base genus every nonzero eigenspace pairs with a
    // nonzero conjugate, so the derived group equals its positive part and
    // the monodromy is the whole of it.
    report.qualifier = MonodromyQualifier::Exact;
    report.lower = der_factors(factors);
    report.upper = report.lower;
  } else {
    // Over the line a fixed part of the Jacobian can hide in the compact
    // factors; only the positive part is forced inside the monodromy.
    report.qualifier = MonodromyQualifier::LowerAndUpperBound;
    report.lower = positive_factors(factors);
    report.upper = der_factors(factors);
  }
  return report;
}

}  // namespace

StarReport star_condition(const MonodromyDatum& datum) {
  const auto profile = chevalley_weil(datum);
  return star_condition(datum, profile, decompose(profile, datum.genus_base));
}

StarReport star_condition(const MonodromyDatum& datum,
                          const EigenspaceProfile& profile,
                          const FactorList& factors) {
  StarReport report;
  report.dim_family = family_dimension(datum);
  report.dim_sg = dim_special(factors);
  report.dim_sg_crosscheck = dim_special_via_sym2(profile);
  if (report.dim_sg != report.dim_sg_crosscheck) {
    throw InternalError(errc::dual_dimension_mismatch,
                        "factor route gave " + std::to_string(report.dim_sg) +
                            ", Sym^2 route gave " +
                            std::to_string(report.dim_sg_crosscheck) + " for " +
                            render_datum_text(datum));
  }
  report.holds = report.dim_family == report.dim_sg;
  report.deficiency = report.dim_sg - report.dim_family;
  report.anomaly = report.dim_family > report.dim_sg;
  return report;
}

Verdict verdict(const MonodromyDatum& datum) {
  const auto profile = chevalley_weil(datum);
  return verdict(datum, profile, decompose(profile, datum.genus_base));
}

Verdict verdict(const MonodromyDatum& datum, const EigenspaceProfile& profile,
                const FactorList& factors) {
  if (family_dimension(datum) < 1) {
    throw InputError(errc::zero_dimensional_family,
                     "datum " + render_datum_text(datum) +
                         " moves in a 0-dimensional family");
  }

  const auto checks = profile_checks(profile, datum);
  if (!checks.all_passed()) {
    throw InternalError(errc::profile_check_failed,
                        "profile of " + render_datum_text(datum) +
                            " violates: " + checks.failures());
  }

  Verdict v;
  v.no_repeating = no_repeating(factors);
  v.star = star_condition(datum, profile, factors);
  v.status = !v.no_repeating ? Status::OutsideHypotheses
             : v.star.holds  ? Status::TotallyGeodesicAndSpecial
                             : Status::NotTotallyGeodesic;
  v.monodromy = build_monodromy_report(factors, v.no_repeating, datum.genus_base);
  v.su11_sp2_advisory = su11_sp2_coincidence(factors);

  if (v.status == Status::TotallyGeodesicAndSpecial && total_genus(datum) >= 8) {
    // No totally geodesic family of this kind exists in genus >= 8; reaching
    // this line means the formulas above are broken.
    throw InternalError(errc::theorem_violation,
                        "totally geodesic verdict in genus " +
                            std::to_string(total_genus(datum)) + " for " +
                            render_datum_text(datum));
  }
  return v;
}

MonodromyReport monodromy_report(const MonodromyDatum& datum) {
  const auto factors = decompose(chevalley_weil(datum), datum.genus_base);
  return build_monodromy_report(factors, no_repeating(factors), datum.genus_base);
}

const char* status_name(Status status) {
  switch (status) {
    case Status::TotallyGeodesicAndSpecial: return "TotallyGeodesicAndSpecial";
    case Status::NotTotallyGeodesic: return "NotTotallyGeodesic";
    case Status::OutsideHypotheses: return "OutsideHypotheses";
  }
  return "Unknown";
}

const char* qualifier_name(MonodromyQualifier qualifier) {
  switch (qualifier) {
    case MonodromyQualifier::Exact: return "Exact";
    case MonodromyQualifier::LowerAndUpperBound: return "LowerAndUpperBound";
    case MonodromyQualifier::UpperBoundOnly: return "UpperBoundOnly";
  }
  return "Unknown";
}

}  // namespace cycmon
