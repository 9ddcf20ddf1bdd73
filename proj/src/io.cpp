#include "cycmon/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cycmon {

using nlohmann::json;

namespace {

Status parse_status(const std::string& s) {
  if (s == "TotallyGeodesicAndSpecial") return Status::TotallyGeodesicAndSpecial;
  if (s == "NotTotallyGeodesic") return Status::NotTotallyGeodesic;
  if (s == "OutsideHypotheses") return Status::OutsideHypotheses;
  throw InputError(errc::corrupt_atlas, "unknown status '" + s + "'");
}

MonodromyQualifier parse_qualifier(const std::string& s) {
  if (s == "Exact") return MonodromyQualifier::Exact;
  if (s == "LowerAndUpperBound") return MonodromyQualifier::LowerAndUpperBound;
  if (s == "UpperBoundOnly") return MonodromyQualifier::UpperBoundOnly;
  throw InputError(errc::corrupt_atlas, "unknown qualifier '" + s + "'");
}

}  // namespace

void to_json(json& j, const MonodromyDatum& v) {
  j = json{{"d", v.d}, {"genus_base", v.genus_base}, {"theta", v.theta}};
}

void from_json(const json& j, MonodromyDatum& v) {
  j.at("d").get_to(v.d);
  j.at("genus_base").get_to(v.genus_base);
  j.at("theta").get_to(v.theta);
}

void to_json(json& j, const CanonicalDatum& v) {
  to_json(j, v.datum);
  j["canonical"] = true;
}

void from_json(const json& j, CanonicalDatum& v) { from_json(j, v.datum); }

void to_json(json& j, const EigenspaceProfile& v) {
  j = json{{"d", v.d}, {"multiplicities", v.multiplicities}};
}

void from_json(const json& j, EigenspaceProfile& v) {
  j.at("d").get_to(v.d);
  j.at("multiplicities").get_to(v.multiplicities);
}

void to_json(json& j, const GroupFactor& v) {
  j = json{{"kind", v.kind == FactorKind::Unitary ? "unitary" : "symplectic"},
           {"p", v.p},
           {"q", v.q},
           {"char_index", v.char_index},
           {"positive", v.is_positive},
           {"compact", v.is_compact}};
}

void from_json(const json& j, GroupFactor& v) {
  const std::string kind = j.at("kind").get<std::string>();
  v.kind = kind == "unitary" ? FactorKind::Unitary : FactorKind::Symplectic;
  j.at("p").get_to(v.p);
  j.at("q").get_to(v.q);
  j.at("char_index").get_to(v.char_index);
  j.at("positive").get_to(v.is_positive);
  j.at("compact").get_to(v.is_compact);
}

void to_json(json& j, const FactorList& v) {
  j = json{{"d", v.d}, {"genus_base", v.genus_base}, {"factors", v.factors}};
}

void from_json(const json& j, FactorList& v) {
  j.at("d").get_to(v.d);
  j.at("genus_base").get_to(v.genus_base);
  j.at("factors").get_to(v.factors);
}

void to_json(json& j, const StarReport& v) {
  j = json{{"dim_family", v.dim_family},
           {"dim_sg", v.dim_sg},
           {"dim_sg_crosscheck", v.dim_sg_crosscheck},
           {"holds", v.holds},
           {"deficiency", v.deficiency},
           {"anomaly", v.anomaly}};
}

void from_json(const json& j, StarReport& v) {
  j.at("dim_family").get_to(v.dim_family);
  j.at("dim_sg").get_to(v.dim_sg);
  j.at("dim_sg_crosscheck").get_to(v.dim_sg_crosscheck);
  j.at("holds").get_to(v.holds);
  j.at("deficiency").get_to(v.deficiency);
  j.at("anomaly").get_to(v.anomaly);
}

void to_json(json& j, const MonodromyReport& v) {
  j = json{{"qualifier", qualifier_name(v.qualifier)},
           {"lower", v.lower},
           {"upper", v.upper}};
}

void from_json(const json& j, MonodromyReport& v) {
  v.qualifier = parse_qualifier(j.at("qualifier").get<std::string>());
  j.at("lower").get_to(v.lower);
  j.at("upper").get_to(v.upper);
}

void to_json(json& j, const Verdict& v) {
  j = json{{"no_repeating", v.no_repeating},
           {"star", v.star},
           {"status", status_name(v.status)},
           {"monodromy", v.monodromy},
           {"dim_Z_assumed_generic", v.dim_z_assumed_generic},
           {"su11_sp2_advisory", v.su11_sp2_advisory}};
}

void from_json(const json& j, Verdict& v) {
  j.at("no_repeating").get_to(v.no_repeating);
  j.at("star").get_to(v.star);
  v.status = parse_status(j.at("status").get<std::string>());
  j.at("monodromy").get_to(v.monodromy);
  j.at("dim_Z_assumed_generic").get_to(v.dim_z_assumed_generic);
  j.at("su11_sp2_advisory").get_to(v.su11_sp2_advisory);
}

void to_json(json& j, const SearchBounds& v) {
  j = json{{"d_max", v.d_max},
           {"genus_base_max", v.genus_base_max},
           {"genus_max", v.genus_max},
           {"genus_min", v.genus_min},
           {"d_fixed", v.d_fixed ? json(*v.d_fixed) : json(nullptr)},
           {"genus_base_fixed",
            v.genus_base_fixed ? json(*v.genus_base_fixed) : json(nullptr)},
           {"tuple_cap", v.tuple_cap}};
}

void from_json(const json& j, SearchBounds& v) {
  j.at("d_max").get_to(v.d_max);
  j.at("genus_base_max").get_to(v.genus_base_max);
  j.at("genus_max").get_to(v.genus_max);
  j.at("genus_min").get_to(v.genus_min);
  v.d_fixed.reset();
  if (!j.at("d_fixed").is_null()) v.d_fixed = j.at("d_fixed").get<Int>();
  v.genus_base_fixed.reset();
  if (!j.at("genus_base_fixed").is_null())
    v.genus_base_fixed = j.at("genus_base_fixed").get<Int>();
  j.at("tuple_cap").get_to(v.tuple_cap);
}

void to_json(json& j, const AtlasRecord& v) {
  j = json{{"datum", v.datum},
           {"genus", v.genus},
           {"profile", v.profile},
           {"factors", v.factors},
           {"verdict", v.verdict},
           {"bounds_hash", v.bounds_hash},
           {"tool_version", v.tool_version}};
}

void from_json(const json& j, AtlasRecord& v) {
  j.at("datum").get_to(v.datum);
  j.at("genus").get_to(v.genus);
  j.at("profile").get_to(v.profile);
  j.at("factors").get_to(v.factors);
  j.at("verdict").get_to(v.verdict);
  j.at("bounds_hash").get_to(v.bounds_hash);
  j.at("tool_version").get_to(v.tool_version);
}

void to_json(json& j, const DatumSummary& v) {
  j = json{{"datum", v.datum},
           {"genus", v.genus},
           {"dim_family", v.dim_family},
           {"dim_sg", v.dim_sg},
           {"no_repeating", v.no_repeating},
           {"status", v.status ? json(status_name(*v.status))
                               : json("ZeroDimensionalFamily")}};
}

void from_json(const json& j, DatumSummary& v) {
  j.at("datum").get_to(v.datum);
  j.at("genus").get_to(v.genus);
  j.at("dim_family").get_to(v.dim_family);
  j.at("dim_sg").get_to(v.dim_sg);
  j.at("no_repeating").get_to(v.no_repeating);
  const std::string s = j.at("status").get<std::string>();
  if (s == "ZeroDimensionalFamily")
    v.status.reset();
  else
    v.status = parse_status(s);
}

void to_json(json& j, const DegenerationResult& v) {
  j = json{{"normalized", v.normalized},
           {"genus_drop", v.genus_drop},
           {"prym_dim", v.prym_dim}};
}

void from_json(const json& j, DegenerationResult& v) {
  j.at("normalized").get_to(v.normalized);
  j.at("genus_drop").get_to(v.genus_drop);
  j.at("prym_dim").get_to(v.prym_dim);
}

std::string render_datum_text(const MonodromyDatum& datum) {
  std::string out = "d=" + std::to_string(datum.d) +
                    " g=" + std::to_string(datum.genus_base) + " theta=";
  for (std::size_t i = 0; i < datum.theta.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(datum.theta[i]);
  }
  return out;
}

std::vector<Int> parse_theta_list(const std::string& text, Int d) {
  std::vector<Int> theta;
  if (d < 2) throw InputError(errc::invalid_order, "group order must be >= 2");
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // trim blanks
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw InputError(errc::invalid_exponent, "cannot parse exponent '" + token + "'");
    }
    if (used != token.size())
      throw InputError(errc::invalid_exponent, "cannot parse exponent '" + token + "'");
    theta.push_back(reduce_exponent(value, d));
  }
  return theta;
}

MonodromyDatum parse_datum_text(const std::string& text) {
  Int d = 0, g = 0;
  std::string theta_part;
  std::istringstream in(text);
  std::string token;
  bool have_d = false, have_g = false, have_theta = false;
  while (in >> token) {
    if (token.rfind("d=", 0) == 0) {
      d = std::stoll(token.substr(2));
      have_d = true;
    } else if (token.rfind("g=", 0) == 0) {
      g = std::stoll(token.substr(2));
      have_g = true;
    } else if (token.rfind("theta=", 0) == 0) {
      theta_part = token.substr(6);
      have_theta = true;
    } else {
      throw InputError(errc::invalid_exponent, "unrecognized token '" + token + "'");
    }
  }
  if (!have_d || !have_g || !have_theta)
    throw InputError(errc::invalid_exponent,
                     "datum text must look like 'd=3 g=1 theta=1,1,1'");
  return validate(d, g, parse_theta_list(theta_part, d));
}

std::string render_profile(const EigenspaceProfile& profile) {
  std::string out = "m = [";
  for (std::size_t i = 0; i < profile.multiplicities.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(profile.multiplicities[i]);
  }
  return out + "]";
}

std::string render_verdict_human(const AtlasRecord& record) {
  const Verdict& v = record.verdict;
  std::ostringstream out;
  out << "datum:      " << render_datum_text(record.datum.datum) << "\n"
      << "genus:      " << record.genus << "   (prym dim "
      << record.genus - record.datum.datum.genus_base << ")\n"
      << "profile:    " << render_profile(record.profile) << "\n"
      << "factors:    " << render_factor_product(record.factors.factors) << "\n"
      << "dims:       family " << v.star.dim_family << ", S(G) " << v.star.dim_sg
      << " (crosscheck " << v.star.dim_sg_crosscheck << ")\n"
      << "no-repeat:  " << (v.no_repeating ? "yes" : "no") << "\n"
      << "star:       " << (v.star.holds ? "holds" : "fails")
      << (v.star.holds ? "" : ", deficiency " + std::to_string(v.star.deficiency))
      << "\n"
      << "status:     " << status_name(v.status) << "\n"
      << "monodromy:  " << qualifier_name(v.monodromy.qualifier);
  if (v.monodromy.qualifier == MonodromyQualifier::Exact) {
    out << ": " << render_factor_product(v.monodromy.upper);
  } else if (v.monodromy.qualifier == MonodromyQualifier::LowerAndUpperBound) {
    out << ": lower " << render_factor_product(v.monodromy.lower) << "; upper "
        << render_factor_product(v.monodromy.upper);
  } else {
    out << ": upper " << render_factor_product(v.monodromy.upper);
  }
  out << "\n";
  if (v.su11_sp2_advisory)
    out << "advisory:   SU(1,1) and Sp(2) factors coexist (isogenous groups, "
           "not counted as repeating)\n";
  if (v.star.anomaly)
    out << "anomaly:    family dimension exceeds dim S(G); needs review\n";
  return out.str();
}

std::string render_summary_human(const DatumSummary& summary) {
  std::ostringstream out;
  out << render_datum_text(summary.datum.datum) << "  genus " << summary.genus
      << "  dim " << summary.dim_family << "  dimS(G) " << summary.dim_sg << "  "
      << (summary.status ? status_name(*summary.status) : "ZeroDimensionalFamily");
  return out.str();
}

std::string render_degeneration_human(const MonodromyDatum& original,
                                      const DegenerationResult& step) {
  std::ostringstream out;
  const auto profile = chevalley_weil(step.normalized);
  out << render_datum_text(original) << "  ->  "
      << render_datum_text(step.normalized) << "\n"
      << "  genus drop 1, prym dim " << step.prym_dim
      << " (isogeny kernel order divides " << original.d << ")\n"
      << "  preserved nontrivial profile: " << render_profile(profile) << "\n";
  return out.str();
}

std::string csv_header() {
  return "d,genus_base,theta,genus,dim_family,dim_sg,no_repeating,status";
}

namespace {

std::string csv_row_impl(const MonodromyDatum& datum, Int genus, Int dim_family,
                         Int dim_sg, bool no_rep, const std::string& status) {
  std::string theta;
  for (std::size_t i = 0; i < datum.theta.size(); ++i) {
    if (i) theta += ",";
    theta += std::to_string(datum.theta[i]);
  }
  std::ostringstream out;
  out << datum.d << "," << datum.genus_base << ",\"" << theta << "\"," << genus
      << "," << dim_family << "," << dim_sg << "," << (no_rep ? "true" : "false")
      << "," << status;
  return out.str();
}

}  // namespace

std::string csv_row(const DatumSummary& s) {
  return csv_row_impl(s.datum.datum, s.genus, s.dim_family, s.dim_sg,
                      s.no_repeating,
                      s.status ? status_name(*s.status) : "ZeroDimensionalFamily");
}

std::string csv_row(const AtlasRecord& r) {
  return csv_row_impl(r.datum.datum, r.genus, r.verdict.star.dim_family,
                      r.verdict.star.dim_sg, r.verdict.no_repeating,
                      status_name(r.verdict.status));
}

void write_atlas(std::ostream& out, const SearchBounds& bounds,
                 const std::vector<AtlasRecord>& records) {
  json header{{"schema", kAtlasSchema},
              {"schema_version", kAtlasSchemaVersion},
              {"bounds", bounds},
              {"tool_version", kToolVersion}};
  out << header.dump() << "\n";
  for (const auto& record : records) out << json(record).dump() << "\n";
}

AtlasFile read_atlas(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw InputError(errc::corrupt_atlas, "empty atlas file");

  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw InputError(errc::corrupt_atlas, std::string("bad header: ") + e.what());
  }
  if (!header.is_object() || !header.contains("schema") ||
      header["schema"] != kAtlasSchema) {
    throw InputError(errc::schema_mismatch, "not a cycmon atlas file");
  }
  if (!header.contains("schema_version") ||
      header["schema_version"].get<int>() != kAtlasSchemaVersion) {
    throw InputError(errc::schema_mismatch,
                     "unsupported atlas schema version");
  }

  AtlasFile file;
  try {
    header.at("bounds").get_to(file.bounds);
    header.at("tool_version").get_to(file.tool_version);
  } catch (const json::exception& e) {
    throw InputError(errc::corrupt_atlas, std::string("bad header: ") + e.what());
  }

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      file.records.push_back(json::parse(line).get<AtlasRecord>());
    } catch (const json::exception& e) {
      throw InputError(errc::corrupt_atlas,
                       "record at line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return file;
}

AtlasFile read_atlas_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(errc::corrupt_atlas, "cannot open '" + path + "'");
  return read_atlas(in);
}

void write_atlas_file(const std::string& path, const SearchBounds& bounds,
                      const std::vector<AtlasRecord>& records) {
  std::ofstream out(path);
  if (!out) throw InputError(errc::corrupt_atlas, "cannot write '" + path + "'");
  write_atlas(out, bounds, records);
}

namespace {

std::string join_path(const std::string& head, const std::string& tail) {
  if (tail.empty()) return head;
  if (tail.front() == '[') return head + tail;
  return head + "." + tail;
}

}  // namespace

// Path of the first differing field; empty only when the difference sits at
// the top level of two scalars (callers always pass objects).
std::string first_json_difference(const json& a, const json& b) {
  if (a == b) return "";
  if (a.is_object() && b.is_object()) {
    std::vector<std::string> keys;
    for (auto it = a.begin(); it != a.end(); ++it) keys.push_back(it.key());
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!a.contains(it.key())) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) {
      if (!a.contains(k) || !b.contains(k)) return k;
      if (a.at(k) != b.at(k)) return join_path(k, first_json_difference(a.at(k), b.at(k)));
    }
    return "";
  }
  if (a.is_array() && b.is_array()) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i])
        return join_path("[" + std::to_string(i) + "]", first_json_difference(a[i], b[i]));
    }
    return "length";
  }
  return "";
}

}  // namespace cycmon
