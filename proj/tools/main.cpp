// Command-line surface over the cyclic-cover monodromy library: single-datum
// analysis, degeneration chains, exhaustive enumeration and the golden-table
// regressions. Data goes to stdout (or --out), diagnostics to stderr.
// Exit codes: 0 ok, 1 input error, 2 regression failure, 3 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cycmon/io.hpp"
#include "cycmon/reference.hpp"

namespace {

using namespace cycmon;
using nlohmann::json;

struct CommonOpts {
  std::string format = "human";
  std::string out_path;
  int workers = 1;
};

void add_format_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void emit(const CommonOpts& opts, const std::string& content) {
  if (opts.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) throw InputError(errc::corrupt_atlas, "cannot write '" + opts.out_path + "'");
  out << content;
}

std::string record_line(const AtlasRecord& r) {
  return render_datum_text(r.datum.datum) + "  genus " + std::to_string(r.genus) +
         "  dim " + std::to_string(r.verdict.star.dim_family) + "  dimS(G) " +
         std::to_string(r.verdict.star.dim_sg) + "  " + status_name(r.verdict.status);
}

std::string default_atlas_path(const SearchBounds& bounds) {
  const char* env = std::getenv("ATLAS_CACHE_DIR");
  std::filesystem::path dir = env && *env ? env : ".atlas-cache";
  std::filesystem::create_directories(dir);
  return (dir / ("atlas-" + bounds_hash(bounds) + ".jsonl")).string();
}

MonodromyDatum datum_from_flags(Int d, Int g, const std::string& theta_text) {
  return validate(d, g, parse_theta_list(theta_text, d));
}

int run_analyze(Int d, Int g, const std::string& theta_text, const CommonOpts& opts) {
  const MonodromyDatum input = datum_from_flags(d, g, theta_text);
  const CanonicalDatum canonical = canonicalize(input);
  const AtlasRecord record = make_record(canonical, std::string("adhoc"));

  std::ostringstream out;
  if (opts.format == "json") {
    out << json(record).dump() << "\n";
  } else if (opts.format == "csv") {
    out << csv_header() << "\n" << csv_row(record) << "\n";
  } else {
    if (input != canonical.datum)
      out << "input:      " << render_datum_text(input) << " (canonicalized below)\n";
    out << render_verdict_human(record);
  }
  emit(opts, out.str());
  return 0;
}

int run_degenerate(Int d, Int g, const std::string& theta_text, const CommonOpts& opts) {
  MonodromyDatum current = datum_from_flags(d, g, theta_text);
  std::vector<DegenerationResult> chain;
  std::ostringstream out;
  if (current.genus_base == 0) {
    // Surface the module error for a base curve with nothing to pinch.
    delta0_degenerate(current);
  }
  while (current.genus_base >= 1) {
    const DegenerationResult step = delta0_degenerate(current);
    if (opts.format == "human") out << render_degeneration_human(current, step);
    chain.push_back(step);
    current = step.normalized;
  }
  if (opts.format == "json") out << json(chain).dump() << "\n";
  if (opts.format == "csv")
    throw std::runtime_error("degenerate has no csv form; use human or json");
  emit(opts, out.str());
  return 0;
}

int run_enumerate(const SearchBounds& bounds, const CommonOpts& opts) {
  const auto data = enumerate_data(bounds, opts.workers);
  std::ostringstream out;
  if (opts.format == "csv") out << csv_header() << "\n";
  for (const auto& c : data) {
    const DatumSummary s = summarize(c);
    if (opts.format == "json")
      out << json(s).dump() << "\n";
    else if (opts.format == "csv")
      out << csv_row(s) << "\n";
    else
      out << render_summary_human(s) << "\n";
  }
  emit(opts, out.str());
  std::cerr << data.size() << " canonical data\n";
  return 0;
}

int run_scan_double(Int genus_max, const CommonOpts& opts) {
  const auto loci = scan_double_loci(genus_max);
  std::ostringstream out;
  if (opts.format == "json") {
    json j = json::array();
    for (const auto& [g, h] : loci) j.push_back({{"g", g}, {"h", h}});
    out << j.dump() << "\n";
  } else if (opts.format == "csv") {
    out << "g,h\n";
    for (const auto& [g, h] : loci) out << g << "," << h << "\n";
  } else {
    for (const auto& [g, h] : loci)
      out << "(g,h) = (" << g << "," << h << ")\n";
  }
  emit(opts, out.str());
  return 0;
}

int run_scan_triple(Int genus_max, const CommonOpts& opts) {
  const auto loci = scan_triple_loci(genus_max);
  std::ostringstream out;
  if (opts.format == "json") {
    json j = json::array();
    for (const auto& t : loci)
      j.push_back({{"g", t[0]}, {"h", t[1]}, {"r", t[2]}, {"m", t[3]}});
    out << j.dump() << "\n";
  } else if (opts.format == "csv") {
    out << "g,h,r,m\n";
    for (const auto& t : loci)
      out << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "\n";
  } else {
    for (const auto& t : loci)
      out << "(g,h,r,m) = (" << t[0] << "," << t[1] << "," << t[2] << "," << t[3]
          << ")\n";
  }
  emit(opts, out.str());
  return 0;
}

int run_scan_special(const SearchBounds& bounds, const std::string& atlas_path,
                     const CommonOpts& opts) {
  const auto records = scan_special(bounds, opts.workers);
  std::ostringstream out;
  if (opts.format == "csv") out << csv_header() << "\n";
  for (const auto& r : records) {
    if (opts.format == "json")
      out << json(r).dump() << "\n";
    else if (opts.format == "csv")
      out << csv_row(r) << "\n";
    else
      out << record_line(r) << "\n";
  }
  emit(opts, out.str());

  const std::string path = atlas_path.empty() ? default_atlas_path(bounds) : atlas_path;
  write_atlas_file(path, bounds, records);
  std::cerr << records.size() << " special records; atlas written to " << path << "\n";
  return 0;
}

const std::set<std::pair<Int, Int>> kDoubleLoci = {{1, 0}, {2, 0}, {2, 1}, {3, 1}};
const std::set<std::array<Int, 4>> kTripleLoci = {
    {2, 0, 4, 2}, {3, 0, 5, 1}, {4, 0, 6, 0}, {3, 1, 2, 1}, {4, 1, 3, 0}};

int run_verify(Int genus_max, const std::string& atlas_path, int workers) {
  bool ok = true;
  const auto report = [&](const std::string& name, bool passed) {
    std::cout << "verify: " << name << " ... " << (passed ? "ok" : "FAIL") << "\n";
    ok = ok && passed;
  };

  {
    std::set<std::pair<Int, Int>> expected;
    for (const auto& t : kDoubleLoci)
      if (t.first <= genus_max) expected.insert(t);
    const auto got = scan_double_loci(genus_max);
    report("double-cover loci (g <= " + std::to_string(genus_max) + ")",
           std::set(got.begin(), got.end()) == expected);
  }
  {
    std::set<std::array<Int, 4>> expected;
    for (const auto& t : kTripleLoci)
      if (t[0] <= genus_max) expected.insert(t);
    const auto got = scan_triple_loci(genus_max);
    report("triple-cover loci (g <= " + std::to_string(genus_max) + ")",
           std::set(got.begin(), got.end()) == expected);
  }
  if (genus_max >= 8) {
    // Curated regression window: let it run regardless of the default cap.
    SearchBounds bounds = SearchBounds::for_total_genus(8, genus_max);
    bounds.tuple_cap = std::numeric_limits<std::uint64_t>::max();
    const auto records = scan_special(bounds, workers);
    report("no special families with 8 <= g <= " + std::to_string(genus_max),
           records.empty());
  }
  if (!atlas_path.empty()) {
    const AtlasFile stored = read_atlas_file(atlas_path);
    const auto fresh = scan_special(stored.bounds, workers);
    const DiffReport diff = regression_compare(atlas_path, fresh);
    report("atlas regression against " + atlas_path, diff.empty());
    for (const auto& e : diff.added) std::cerr << "  added:   " << e.key << "\n";
    for (const auto& e : diff.removed) std::cerr << "  removed: " << e.key << "\n";
    for (const auto& e : diff.changed)
      std::cerr << "  changed: " << e.key << " (" << e.field << ")\n";
  }
  return ok ? 0 : 2;
}

int run_export(const std::string& atlas_path, const CommonOpts& opts) {
  const AtlasFile file = read_atlas_file(atlas_path);
  std::ostringstream out;
  if (opts.format == "json") {
    for (const auto& r : file.records) out << json(r).dump() << "\n";
  } else if (opts.format == "csv") {
    out << csv_header() << "\n";
    for (const auto& r : file.records) out << csv_row(r) << "\n";
  } else {
    for (const auto& r : file.records) out << record_line(r) << "\n";
  }
  emit(opts, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycmon: monodromy data of cyclic curve covers -- eigenspace "
               "profiles, group factor decompositions, totally geodesic / "
               "special classification, and exhaustive atlases"};
  app.require_subcommand(1);

  Int d = 0, g = 0;
  std::string theta_text;
  CommonOpts opts;

  Int d_max = 0, base_genus_max = -1, g_max = 0, g_min = 0;
  std::uint64_t cap = SearchBounds{}.tuple_cap;
  std::string atlas_path;
  bool d_set = false, g_set = false;

  const auto add_datum_opts = [&](CLI::App* cmd) {
    cmd->add_option("--d", d, "Cyclic group order")->required();
    cmd->add_option("--g", g, "Base curve genus g'")->required();
    cmd->add_option("--theta", theta_text,
                    "Comma-separated exponents; negatives reduce mod d")
        ->default_val("");
  };

  auto* analyze = app.add_subcommand("analyze", "Classify a single datum");
  add_datum_opts(analyze);
  add_format_opts(analyze, opts);

  auto* degenerate =
      app.add_subcommand("degenerate", "Degeneration chain down to base genus 0");
  add_datum_opts(degenerate);
  add_format_opts(degenerate, opts);

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List canonical data within bounds");
  enumerate_cmd->add_option("--d-max", d_max, "Upper bound on d");
  enumerate_cmd->add_option("--d", d, "Fix d")->each([&](const std::string&) { d_set = true; });
  enumerate_cmd->add_option("--base-genus-max", base_genus_max, "Upper bound on g'");
  enumerate_cmd->add_option("--g", g, "Fix g'")->each([&](const std::string&) { g_set = true; });
  enumerate_cmd->add_option("--g-max", g_max, "Upper bound on total genus")->required();
  enumerate_cmd->add_option("--g-min", g_min, "Lower bound on total genus");
  enumerate_cmd->add_option("--cap", cap, "Candidate tuple cap");
  enumerate_cmd->add_option("--workers", opts.workers, "Worker threads (0 = all cores)");
  add_format_opts(enumerate_cmd, opts);

  Int scan_genus_max = 100;
  auto* scan_double = app.add_subcommand("scan-double", "Totally geodesic double-cover loci");
  scan_double->add_option("--g-max,--genus-max", scan_genus_max, "Total genus bound")
      ->capture_default_str();
  add_format_opts(scan_double, opts);

  auto* scan_triple = app.add_subcommand("scan-triple", "Totally geodesic triple-cover loci");
  scan_triple->add_option("--g-max,--genus-max", scan_genus_max, "Total genus bound")
      ->capture_default_str();
  add_format_opts(scan_triple, opts);

  auto* scan_special_cmd = app.add_subcommand(
      "scan-special", "All totally geodesic (= special) families within bounds");
  scan_special_cmd->add_option("--g-max,--genus-max", g_max, "Upper bound on total genus")
      ->required();
  scan_special_cmd->add_option("--g-min", g_min, "Lower bound on total genus");
  scan_special_cmd->add_option("--d-max", d_max, "Upper bound on d (default: 4*g_max+2)");
  scan_special_cmd->add_option("--base-genus-max", base_genus_max,
                               "Upper bound on g' (default: g_max)");
  scan_special_cmd->add_option("--d", d, "Fix d")->each([&](const std::string&) { d_set = true; });
  scan_special_cmd->add_option("--g", g, "Fix g'")->each([&](const std::string&) { g_set = true; });
  scan_special_cmd->add_option("--cap", cap, "Candidate tuple cap");
  scan_special_cmd->add_option("--workers", opts.workers, "Worker threads (0 = all cores)");
  scan_special_cmd->add_option("--atlas", atlas_path,
                               "Atlas output path (default: ATLAS_CACHE_DIR)");
  add_format_opts(scan_special_cmd, opts);

  Int verify_genus_max = 100;
  int verify_workers = 0;
  std::string verify_atlas;
  auto* verify = app.add_subcommand("verify", "Golden-table regressions");
  verify->add_option("--genus-max,--g-max", verify_genus_max, "Total genus bound")
      ->capture_default_str();
  verify->add_option("--atlas", verify_atlas, "Also diff a stored atlas against a fresh scan");
  verify->add_option("--workers", verify_workers, "Worker threads (0 = all cores)");

  auto* export_cmd = app.add_subcommand("export", "Convert an atlas file");
  export_cmd->add_option("--atlas", atlas_path, "Atlas file to read")->required();
  add_format_opts(export_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return run_analyze(d, g, theta_text, opts);
    if (app.got_subcommand(degenerate)) return run_degenerate(d, g, theta_text, opts);
    if (app.got_subcommand(enumerate_cmd) || app.got_subcommand(scan_special_cmd)) {
      SearchBounds bounds;
      bounds.genus_max = g_max;
      bounds.genus_min = g_min;
      bounds.tuple_cap = cap;
      if (d_set) bounds.d_fixed = d;
      if (g_set) bounds.genus_base_fixed = g;
      if (d_max > 0)
        bounds.d_max = d_max;
      else if (d_set)
        bounds.d_max = d;
      else
        bounds.d_max = 4 * g_max + 2;
      bounds.genus_base_max = base_genus_max >= 0 ? base_genus_max : g_max;
      if (app.got_subcommand(enumerate_cmd)) return run_enumerate(bounds, opts);
      return run_scan_special(bounds, atlas_path, opts);
    }
    if (app.got_subcommand(scan_double)) return run_scan_double(scan_genus_max, opts);
    if (app.got_subcommand(scan_triple)) return run_scan_triple(scan_genus_max, opts);
    if (app.got_subcommand(verify))
      return run_verify(verify_genus_max, verify_atlas, verify_workers);
    if (app.got_subcommand(export_cmd)) return run_export(atlas_path, opts);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
