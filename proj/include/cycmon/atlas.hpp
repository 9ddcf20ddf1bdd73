#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycmon/classify.hpp"
#include "cycmon/degeneration.hpp"

namespace cycmon {

// Finite search window for the enumeration of canonical data. genus_max
// bounds the branch count r through Riemann-Hurwitz (every branch point
// contributes at least d - d/2 to 2g - 2), so the space is finite once
// d_max, genus_base_max and genus_max are set.
struct SearchBounds {
  Int d_max = 0;
  Int genus_base_max = 0;
  Int genus_max = 0;
  Int genus_min = 0;
  std::optional<Int> d_fixed;
  std::optional<Int> genus_base_fixed;
  // Cap on the estimated number of candidate exponent multisets before orbit
  // dedup; crossing it raises InputError(BoundsTooLarge).
  std::uint64_t tuple_cap = 100'000'000;

  // Window covering every datum with total genus in [genus_min, genus_max]:
  // d_max = 4*genus_max + 2 (the classical Wiman bound for the order of a
  // cyclic automorphism group in genus >= 2; genus-1 data have d <= 6) and
  // genus_base_max = genus_max (the base genus never exceeds g).
  static SearchBounds for_total_genus(Int genus_min, Int genus_max);

  bool operator==(const SearchBounds&) const = default;
};

// Estimated number of candidate exponent multisets the bounds admit (exact
// count of genus-feasible multisets, before the sum, generation and
// canonicality filters).
double estimate_candidates(const SearchBounds& bounds);

// One classified canonical datum, the persisted unit of the atlas. All
// mathematical fields are recomputable from the datum alone.
struct AtlasRecord {
  CanonicalDatum datum;
  Int genus = 0;
  EigenspaceProfile profile;
  FactorList factors;
  Verdict verdict;
  std::string bounds_hash;
  std::string tool_version;

  bool operator==(const AtlasRecord&) const = default;
};

// Lightweight row used by plain enumeration listings; unlike AtlasRecord it
// also covers rigid data, which carry no Verdict.
struct DatumSummary {
  CanonicalDatum datum;
  Int genus = 0;
  Int dim_family = 0;
  Int dim_sg = 0;
  bool no_repeating = false;
  std::optional<Status> status;  // empty for zero-dimensional families

  bool operator==(const DatumSummary&) const = default;
};

// Every canonical valid datum within bounds, exactly once, ordered by
// (d, genus_base, theta lex). `workers` = 1 runs serially; 0 or > 1 fans the
// (d, g', r) cells out across OpenMP threads. Output is identical for any
// worker count.
std::vector<CanonicalDatum> enumerate_data(const SearchBounds& bounds,
                                           int workers = 1);

DatumSummary summarize(const CanonicalDatum& datum);
AtlasRecord make_record(const CanonicalDatum& datum, const SearchBounds& bounds);
AtlasRecord make_record(const CanonicalDatum& datum, const std::string& bounds_hash);

// All positive-dimensional no-repeating records satisfying the star
// condition, i.e. the totally geodesic (= special) families in the window.
std::vector<AtlasRecord> scan_special(const SearchBounds& bounds,
                                      int workers = 1);

// Double covers: all (g, h) with 1 <= g <= genus_max whose family of double
// covers C -> C' (g(C) = g, g(C') = h, datum (2, h, [1]^{2g-4h+2})) is
// totally geodesic.
std::vector<std::pair<Int, Int>> scan_double_loci(Int genus_max);

// Triple covers in the normal form [1]^{m+n} [2]^m (m canceling pairs, n
// exponents equal to 1, r = 2m + n branch points): all totally geodesic
// (g, h, r, m) with g <= genus_max, including the unramified families.
std::vector<std::array<Int, 4>> scan_triple_loci(Int genus_max);

// Hash of the bounds fields, stamped into records for provenance.
std::string bounds_hash(const SearchBounds& bounds);

struct DiffEntry {
  std::string key;    // datum text form
  std::string field;  // dotted path of the first differing field (changed only)

  bool operator==(const DiffEntry&) const = default;
};

struct DiffReport {
  std::vector<DiffEntry> added;
  std::vector<DiffEntry> removed;
  std::vector<DiffEntry> changed;

  bool empty() const { return added.empty() && removed.empty() && changed.empty(); }
};

// Compares a stored atlas file against a fresh scan. Metadata (bounds hash,
// tool version) is ignored, so a widened rerun shows additions only.
DiffReport regression_compare(const std::string& atlas_path,
                              const std::vector<AtlasRecord>& fresh);
DiffReport diff_records(const std::vector<AtlasRecord>& stored,
                        const std::vector<AtlasRecord>& fresh);

}  // namespace cycmon
