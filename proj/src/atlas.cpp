#include "cycmon/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cycmon/io.hpp"

namespace cycmon {

namespace {

Int smallest_prime_factor(Int d) {
  for (Int p = 2; p * p <= d; ++p)
    if (d % p == 0) return p;
  return d;
}

// Minimal branching weight d - gcd(theta, d) a single branch point can
// contribute: d minus the largest proper divisor of d.
Int min_branch_weight(Int d) { return d - d / smallest_prime_factor(d); }

struct EffectiveBounds {
  Int d_lo, d_hi;
  Int gp_lo, gp_hi;
  Int genus_min, genus_max;
};

EffectiveBounds resolve(const SearchBounds& b) {
  if (b.d_max < 2 || b.d_max > kMaxOrder)
    throw InputError(errc::invalid_order, "d_max must lie in [2, 10^6]");
  if (b.genus_max < 0 || b.genus_base_max < 0 || b.genus_min < 0)
    throw InputError(errc::invalid_genus, "genus bounds must be nonnegative");
  if (b.genus_min > b.genus_max)
    throw InputError(errc::invalid_genus, "genus_min exceeds genus_max");
  EffectiveBounds e{2, b.d_max, 0, b.genus_base_max, b.genus_min, b.genus_max};
  if (b.d_fixed) {
    if (*b.d_fixed < 2 || *b.d_fixed > b.d_max)
      throw InputError(errc::invalid_order, "fixed d outside [2, d_max]");
    e.d_lo = e.d_hi = *b.d_fixed;
  }
  if (b.genus_base_fixed) {
    if (*b.genus_base_fixed < 0 || *b.genus_base_fixed > b.genus_base_max)
      throw InputError(errc::invalid_genus, "fixed base genus outside range");
    e.gp_lo = e.gp_hi = *b.genus_base_fixed;
  }
  return e;
}

// One unit of parallel work: all branch counts of a (d, g') pair share one
// prefix tree, so the scan partitions by (d, g') and each cell enumerates
// every admissible r at once.
struct Cell {
  Int d = 2;
  Int gp = 0;
  Int r_lo = 0;
  Int r_hi = 0;
  Int budget = 0;  // max total branching weight sum_i (d - gcd(theta_i, d))
};

// Branching weight budget for total genus <= genus_max at fixed (d, g');
// negative means even the unramified cover exceeds the genus window.
Int weight_budget(Int d, Int gp, Int genus_max) {
  return 2 * genus_max - 2 - d * (2 * gp - 2);
}

Int min_branch_count(Int gp) {
  if (gp == 0) return 3;
  // A single exponent in {1,...,d-1} cannot sum to 0 mod d, so r = 1 yields
  // nothing; start genus-1 bases at r = 2.
  if (gp == 1) return 2;
  return 0;
}

std::vector<Cell> build_cells(const SearchBounds& b) {
  const EffectiveBounds e = resolve(b);
  std::vector<Cell> cells;
  for (Int d = e.d_lo; d <= e.d_hi; ++d) {
    const Int wmin = min_branch_weight(d);
    for (Int gp = e.gp_lo; gp <= e.gp_hi; ++gp) {
      const Int budget = weight_budget(d, gp, e.genus_max);
      if (budget < 0) break;  // larger gp only shrinks the budget
      const Int r_hi = std::min(budget / wmin, kMaxBranchPoints);
      const Int r_lo = min_branch_count(gp);
      if (r_hi < r_lo && gp < 2) continue;
      cells.push_back({d, gp, r_lo, r_hi, budget});
    }
  }
  return cells;
}

// Exact count of multisets of size r over the exponent alphabet of d whose
// branching weight fits the budget, computed by a DP over divisor classes
// (all exponents with gcd(theta, d) = e share the weight d - e and there are
// phi(d/e) of them). This is the candidate count the tuple cap meters.
std::vector<double> feasible_multiset_counts(Int d, Int budget, Int r_hi) {
  std::vector<std::pair<Int, Int>> classes;  // (alphabet size, weight)
  for (Int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    Int n = d / e, phi = n;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      phi -= phi / p;
      while (m % p == 0) m /= p;
    }
    if (m > 1) phi -= phi / m;
    classes.push_back({phi, d - e});
  }

  const std::size_t rows = static_cast<std::size_t>(r_hi) + 1;
  const std::size_t cols = static_cast<std::size_t>(budget) + 1;
  std::vector<std::vector<double>> f(rows, std::vector<double>(cols, 0.0));
  f[0][0] = 1.0;
  for (const auto& [n, w] : classes) {
    auto g = f;
    for (std::size_t j = 0; j < rows; ++j) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (f[j][c] == 0.0) continue;
        // take k >= 1 items from this class: multichoose(n, k) ways
        double ways = 1.0;
        for (std::size_t k = 1; j + k < rows; ++k) {
          const std::size_t cw = c + k * static_cast<std::size_t>(w);
          if (cw >= cols) break;
          ways *= static_cast<double>(n + static_cast<Int>(k) - 1) / static_cast<double>(k);
          g[j + k][cw] += f[j][c] * ways;
        }
      }
    }
    f = std::move(g);
  }
  std::vector<double> per_r(rows, 0.0);
  for (std::size_t j = 0; j < rows; ++j)
    per_r[j] = std::accumulate(f[j].begin(), f[j].end(), 0.0);
  return per_r;
}

void ensure_within_cap(const SearchBounds& b) {
  const double estimate = estimate_candidates(b);
  if (estimate > static_cast<double>(b.tuple_cap)) {
    char est[32];
    std::snprintf(est, sizeof est, "%.3g", estimate);
    throw InputError(errc::bounds_too_large,
                     "search space estimate " + std::string(est) +
                         " candidate tuples exceeds cap " +
                         std::to_string(b.tuple_cap) + "; narrow the bounds");
  }
}

Int mod_inverse(Int a, Int n) {
  // extended gcd; a is assumed coprime to n
  Int old_r = a % n, r = n;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return ((old_s % n) + n) % n;
}

// Per-cell scratch shared by the exponent enumeration: weight tables, the
// unit group of Z/d and (for moderate d) the unit multiplication table.
struct CellTables {
  Int d;
  std::vector<Int> weight;     // weight[t] = d - gcd(t, d), weight[0] unused
  std::vector<Int> min_from;   // min weight over values >= t (d at t = d)
  std::vector<Int> units;      // units of Z/d other than 1
  std::vector<Int> mul;        // mul[ui * d + t] = units[ui] * t mod d

  static constexpr Int kMulTableMaxOrder = 512;

  explicit CellTables(Int d_in) : d(d_in), weight(static_cast<std::size_t>(d) + 1) {
    for (Int t = 1; t < d; ++t)
      weight[static_cast<std::size_t>(t)] = d - std::gcd(t, d);
    min_from.assign(static_cast<std::size_t>(d) + 1, d);
    for (Int t = d - 1; t >= 1; --t)
      min_from[static_cast<std::size_t>(t)] =
          std::min(min_from[static_cast<std::size_t>(t) + 1],
                   weight[static_cast<std::size_t>(t)]);
    for (Int u = 2; u < d; ++u)
      if (std::gcd(u, d) == 1) units.push_back(u);
    if (d <= kMulTableMaxOrder) {
      mul.resize(units.size() * static_cast<std::size_t>(d));
      for (std::size_t ui = 0; ui < units.size(); ++ui)
        for (Int t = 0; t < d; ++t)
          mul[ui * static_cast<std::size_t>(d) + static_cast<std::size_t>(t)] =
              (units[ui] * t) % d;
    }
  }

  // True iff the sorted tuple is the lexicographic minimum of its orbit
  // under unit multiplication. `image` is caller-owned scratch so a shared
  // table stays read-only across worker threads.
  bool theta_is_canonical(const std::vector<Int>& theta,
                          std::vector<Int>& image) const {
    if (theta.empty()) return true;
    image.resize(theta.size());
    for (std::size_t ui = 0; ui < units.size(); ++ui) {
      const Int* row = mul.empty()
                           ? nullptr
                           : mul.data() + ui * static_cast<std::size_t>(d);
      const Int u = units[ui];
      const auto map = [&](Int t) {
        return row ? row[static_cast<std::size_t>(t)] : (u * t) % d;
      };
      Int lo = d;
      for (Int t : theta) lo = std::min(lo, map(t));
      if (lo > theta[0]) continue;  // image starts higher, cannot beat
      for (std::size_t i = 0; i < theta.size(); ++i) image[i] = map(theta[i]);
      std::sort(image.begin(), image.end());
      if (image < theta) return false;
    }
    return true;
  }
};

// Enumerates the sorted exponent tuples of one (d, g') cell, all branch
// counts r in [r_lo, r_hi] in a single walk, as runs of equal values in
// ascending order. Intermediate runs pick a value and a repeat count; the
// closing run is not scanned but solved: filling s final slots with value t
// needs s*t = -sum (mod d), a linear congruence with at most gcd(s, d)
// admissible values per s. Two prunes do the heavy lifting:
//   - branching weight against the genus budget, and
//   - the canonical-prefix test: if some unit u maps a chosen value below
//     theta[0], every completion loses to its u-image, so the subtree dies.
template <typename Emit>
void enumerate_cell(const Cell& cell, const CellTables& tables, Int genus_min,
                    Emit&& emit) {
  const Int d = cell.d;
  if (cell.gp >= 2) {
    const Int g = d * (cell.gp - 1) + 1;
    if (g >= genus_min) emit(CanonicalDatum{MonodromyDatum{d, cell.gp, {}}});
  }
  if (cell.r_hi < 2) return;  // a single exponent cannot sum to 0 mod d

  std::vector<Int> theta;
  theta.reserve(static_cast<std::size_t>(cell.r_hi));
  std::vector<Int> scratch;

  const std::size_t nu = tables.units.size();
  // Per-depth running minima of u * prefix over each unit u.
  std::vector<Int> umin_stack((static_cast<std::size_t>(cell.r_hi) + 1) * nu, d);
  Int theta0 = 0;

  const auto unit_image = [&](std::size_t ui, Int t) {
    return tables.mul.empty()
               ? (tables.units[ui] * t) % d
               : tables.mul[ui * static_cast<std::size_t>(d) + static_cast<std::size_t>(t)];
  };

  // Extends the depth's unit minima with value t; false if some unit image
  // drops below the first exponent (prefix cannot be canonical).
  const auto extend_umin = [&](Int depth, Int t) {
    const Int first = depth == 0 ? t : theta0;
    const Int* prev = umin_stack.data() + static_cast<std::size_t>(depth) * nu;
    Int* next = umin_stack.data() + (static_cast<std::size_t>(depth) + 1) * nu;
    for (std::size_t ui = 0; ui < nu; ++ui) {
      const Int v = std::min(depth == 0 ? d : prev[ui], unit_image(ui, t));
      if (v < first) return false;
      next[ui] = v;
    }
    return true;
  };

  const auto finalize = [&](Int weight) {
    const Int two_g_minus_2 = d * (2 * cell.gp - 2) + weight;
    const Int g = (two_g_minus_2 + 2) / 2;
    if (g < genus_min) return;
    if (cell.gp == 0) {
      Int gg = d;
      for (Int t : theta) gg = std::gcd(gg, t);
      if (gg != 1) return;
    }
    if (!tables.theta_is_canonical(theta, scratch)) return;
    emit(CanonicalDatum{MonodromyDatum{d, cell.gp, theta}});
  };

  const auto close_run = [&](Int min_val, Int used, Int weight, Int sum_mod,
                             Int depth) {
    // Close with s >= s_lo more slots of a single value t >= min_val such
    // that s*t = -sum (mod d).
    const Int target = (d - sum_mod) % d;
    const Int s_lo = std::max<Int>(1, cell.r_lo - used);
    const Int cheapest = tables.min_from[static_cast<std::size_t>(min_val)];
    Int s_hi = cell.r_hi - used;
    if (cheapest > 0) s_hi = std::min(s_hi, (cell.budget - weight) / cheapest);
    for (Int s = s_lo; s <= s_hi; ++s) {
      const auto try_value = [&](Int t) {
        const Int w = tables.weight[static_cast<std::size_t>(t)];
        if (weight + s * w > cell.budget) return;
        if (!extend_umin(depth, t)) return;
        theta.insert(theta.end(), static_cast<std::size_t>(s), t);
        finalize(weight + s * w);
        theta.resize(theta.size() - static_cast<std::size_t>(s));
      };
      const Int s_mod = s % d;
      if (s_mod == 0) {
        if (target != 0) continue;
        for (Int t = min_val; t < d; ++t) try_value(t);
        continue;
      }
      const Int g = std::gcd(s_mod, d);
      if (target % g != 0) continue;
      const Int n = d / g;
      const Int t0 = (target / g) % n * mod_inverse(s_mod / g, n) % n;
      Int t = t0 == 0 ? n : t0;  // exponent 0 is not admissible
      for (; t < d; t += n)
        if (t >= min_val) try_value(t);
    }
  };

  auto runs = [&](auto&& self, Int min_val, Int used, Int weight, Int sum_mod,
                  Int depth) -> void {
    close_run(min_val, used, weight, sum_mod, depth);
    if (used + 2 > cell.r_hi) return;  // no room for a run plus a closing run
    // A non-closing run leaves at least one slot for a strictly larger value.
    for (Int t = min_val; t <= d - 2; ++t) {
      const Int wt = tables.weight[static_cast<std::size_t>(t)];
      const Int tail_min = tables.min_from[static_cast<std::size_t>(t) + 1];
      if (weight + wt + tail_min > cell.budget) continue;
      if (!extend_umin(depth, t)) continue;
      if (depth == 0) theta0 = t;
      Int run_weight = weight;
      Int run_sum = sum_mod;
      Int pushed = 0;
      for (Int k = 1; used + k + 1 <= cell.r_hi; ++k) {
        run_weight += wt;
        run_sum = (run_sum + t) % d;
        if (run_weight + tail_min > cell.budget) break;  // weight grows with k
        theta.push_back(t);
        ++pushed;
        self(self, t + 1, used + k, run_weight, run_sum, depth + 1);
      }
      theta.resize(theta.size() - static_cast<std::size_t>(pushed));
    }
  };

  runs(runs, 1, 0, 0, 0, 0);
}

// Runs a per-cell job over every cell, serially or across OpenMP threads,
// and concatenates the per-cell outputs in deterministic cell order. Lookup
// tables are built once per distinct d and shared read-only; the collector
// is the only writer of the final vector.
template <typename T, typename Job>
std::vector<T> run_cells(const SearchBounds& b, int workers, Job&& job) {
  ensure_within_cap(b);
  const std::vector<Cell> cells = build_cells(b);
  std::vector<std::vector<T>> slots(cells.size());

  std::map<Int, CellTables> tables;
  for (const Cell& cell : cells) tables.try_emplace(cell.d, cell.d);

  bool parallel = workers != 1;
#ifndef _OPENMP
  parallel = false;
#endif

  if (!parallel) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      job(cells[i], tables.at(cells[i].d), slots[i]);
  } else {
#ifdef _OPENMP
    std::exception_ptr failure;
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::size_t i = 0; i < cells.size(); ++i) {
      try {
        job(cells[i], tables.at(cells[i].d), slots[i]);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
#endif
  }

  std::size_t total = 0;
  for (const auto& s : slots) total += s.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto& s : slots)
    for (auto& v : s) out.push_back(std::move(v));
  return out;
}

const MonodromyDatum& datum_of(const CanonicalDatum& c) { return c.datum; }
const MonodromyDatum& datum_of(const AtlasRecord& r) { return r.datum.datum; }

template <typename T>
void sort_by_datum(std::vector<T>& items) {
  std::sort(items.begin(), items.end(),
            [](const T& a, const T& b) { return datum_less(datum_of(a), datum_of(b)); });
}

}  // namespace

SearchBounds SearchBounds::for_total_genus(Int genus_min, Int genus_max) {
  if (genus_max < 1)
    throw InputError(errc::invalid_genus, "total genus bound must be >= 1");
  SearchBounds b;
  b.d_max = 4 * genus_max + 2;
  b.genus_base_max = genus_max;
  b.genus_max = genus_max;
  b.genus_min = genus_min;
  return b;
}

double estimate_candidates(const SearchBounds& bounds) {
  const EffectiveBounds e = resolve(bounds);
  double total = 0.0;
  for (Int d = e.d_lo; d <= e.d_hi; ++d) {
    const Int wmin = min_branch_weight(d);
    for (Int gp = e.gp_lo; gp <= e.gp_hi; ++gp) {
      const Int budget = weight_budget(d, gp, e.genus_max);
      if (budget < 0) break;
      const Int r_hi = std::min(budget / wmin, kMaxBranchPoints);
      // A window whose counting DP would itself be huge exceeds any cap.
      if (static_cast<double>(r_hi + 1) * static_cast<double>(budget + 1) > 5e7)
        return 1e30;
      const auto per_r = feasible_multiset_counts(d, budget, r_hi);
      for (Int r = min_branch_count(gp); r <= r_hi; ++r) {
        // Feasible multisets plus the unavoidable first-level sweep.
        total += per_r[static_cast<std::size_t>(r)] + static_cast<double>(d - 1);
        if (total > 1e18) return total;  // already hopeless, stop counting
      }
    }
  }
  return total;
}

std::vector<CanonicalDatum> enumerate_data(const SearchBounds& bounds, int workers) {
  auto out = run_cells<CanonicalDatum>(
      bounds, workers,
      [&](const Cell& cell, const CellTables& tables, std::vector<CanonicalDatum>& slot) {
        enumerate_cell(cell, tables, bounds.genus_min,
                       [&](CanonicalDatum c) { slot.push_back(std::move(c)); });
      });
  sort_by_datum(out);
  return out;
}

DatumSummary summarize(const CanonicalDatum& canonical) {
  const MonodromyDatum& datum = canonical.datum;
  DatumSummary s;
  s.datum = canonical;
  s.genus = total_genus(datum);
  s.dim_family = family_dimension(datum);
  const auto star = star_condition(datum);
  s.dim_sg = star.dim_sg;
  s.no_repeating = no_repeating(decompose(chevalley_weil(datum), datum.genus_base));
  if (s.dim_family >= 1) s.status = verdict(datum).status;
  return s;
}

AtlasRecord make_record(const CanonicalDatum& canonical, const std::string& hash) {
  const MonodromyDatum& datum = canonical.datum;
  AtlasRecord rec;
  rec.datum = canonical;
  rec.genus = total_genus(datum);
  rec.profile = chevalley_weil(datum);
  rec.factors = decompose(rec.profile, datum.genus_base);
  rec.verdict = verdict(datum);
  rec.bounds_hash = hash;
  rec.tool_version = kToolVersion;
  return rec;
}

AtlasRecord make_record(const CanonicalDatum& canonical, const SearchBounds& bounds) {
  return make_record(canonical, bounds_hash(bounds));
}

std::vector<AtlasRecord> scan_special(const SearchBounds& bounds, int workers) {
  const std::string hash = bounds_hash(bounds);
  auto out = run_cells<AtlasRecord>(
      bounds, workers,
      [&](const Cell& cell, const CellTables& tables, std::vector<AtlasRecord>& slot) {
        enumerate_cell(cell, tables, bounds.genus_min, [&](const CanonicalDatum& c) {
          const MonodromyDatum& datum = c.datum;
          if (family_dimension(datum) < 1) return;
          // One pass of the cheap pieces rejects almost every datum; the
          // full verdict (with its internal consistency checks) runs only
          // on the hits.
          const EigenspaceProfile profile = chevalley_weil(datum);
          const FactorList factors = decompose(profile, datum.genus_base);
          const StarReport star = star_condition(datum, profile, factors);
          if (!star.holds || !no_repeating(factors)) return;
          AtlasRecord rec;
          rec.datum = c;
          rec.genus = total_genus(datum);
          rec.profile = profile;
          rec.factors = factors;
          rec.verdict = verdict(datum, profile, factors);
          rec.bounds_hash = hash;
          rec.tool_version = kToolVersion;
          slot.push_back(std::move(rec));
        });
      });
  sort_by_datum(out);
  return out;
}

std::vector<std::pair<Int, Int>> scan_double_loci(Int genus_max) {
  std::vector<std::pair<Int, Int>> hits;
  for (Int g = 1; g <= genus_max; ++g) {
    for (Int h = 0; 2 * g - 4 * h + 2 >= 0; ++h) {
      const Int r = 2 * g - 4 * h + 2;
      if (r == 0 && h < 2) continue;  // no valid unramified datum below genus 2
      const MonodromyDatum datum =
          validate(2, h, std::vector<Int>(static_cast<std::size_t>(r), 1));
      if (family_dimension(datum) < 1) continue;
      if (verdict(datum).status == Status::TotallyGeodesicAndSpecial)
        hits.push_back({g, h});
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

std::vector<std::array<Int, 4>> scan_triple_loci(Int genus_max) {
  std::vector<std::array<Int, 4>> hits;
  for (Int h = 0; 3 * h - 2 <= genus_max; ++h) {
    for (Int r = min_branch_count(h); 3 * h - 2 + r <= genus_max; ++r) {
      const Int g = 3 * h - 2 + r;
      if (g < 1) continue;
      if (r == 0 && h < 2) continue;
      for (Int m = 0; 2 * m <= r; ++m) {
        const Int n = r - 2 * m;
        if (n % 3 != 0) continue;  // sum of exponents must vanish mod 3
        std::vector<Int> theta(static_cast<std::size_t>(m + n), 1);
        theta.insert(theta.end(), static_cast<std::size_t>(m), 2);
        const MonodromyDatum datum = validate(3, h, std::move(theta));
        if (family_dimension(datum) < 1) continue;
        if (verdict(datum).status == Status::TotallyGeodesicAndSpecial)
          hits.push_back({g, h, r, m});
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

std::string bounds_hash(const SearchBounds& bounds) {
  nlohmann::json j;
  to_json(j, bounds);
  const std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

DiffReport diff_records(const std::vector<AtlasRecord>& stored,
                        const std::vector<AtlasRecord>& fresh) {
  const auto math_json = [](const AtlasRecord& r) {
    nlohmann::json j;
    to_json(j, r);
    j.erase("bounds_hash");
    j.erase("tool_version");
    return j;
  };

  std::vector<std::pair<std::string, const AtlasRecord*>> a, b;
  for (const auto& r : stored) a.push_back({render_datum_text(r.datum.datum), &r});
  for (const auto& r : fresh) b.push_back({render_datum_text(r.datum.datum), &r});
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  DiffReport diff;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      diff.removed.push_back({a[i].first, ""});
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      diff.added.push_back({b[j].first, ""});
      ++j;
    } else {
      const std::string field =
          first_json_difference(math_json(*a[i].second), math_json(*b[j].second));
      if (!field.empty()) diff.changed.push_back({a[i].first, field});
      ++i;
      ++j;
    }
  }
  return diff;
}

DiffReport regression_compare(const std::string& atlas_path,
                              const std::vector<AtlasRecord>& fresh) {
  const AtlasFile stored = read_atlas_file(atlas_path);
  return diff_records(stored.records, fresh);
}

}  // namespace cycmon
