#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycmon/atlas.hpp"

namespace cycmon {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kAtlasSchema = "cycmon-atlas";
inline constexpr int kAtlasSchemaVersion = 1;

// JSON serialization (field names are frozen in docs/atlas-schema.md; keys
// are emitted in sorted order so equal values always render byte-identically).
void to_json(nlohmann::json& j, const MonodromyDatum& v);
void from_json(const nlohmann::json& j, MonodromyDatum& v);
void to_json(nlohmann::json& j, const CanonicalDatum& v);
void from_json(const nlohmann::json& j, CanonicalDatum& v);
void to_json(nlohmann::json& j, const EigenspaceProfile& v);
void from_json(const nlohmann::json& j, EigenspaceProfile& v);
void to_json(nlohmann::json& j, const GroupFactor& v);
void from_json(const nlohmann::json& j, GroupFactor& v);
void to_json(nlohmann::json& j, const FactorList& v);
void from_json(const nlohmann::json& j, FactorList& v);
void to_json(nlohmann::json& j, const StarReport& v);
void from_json(const nlohmann::json& j, StarReport& v);
void to_json(nlohmann::json& j, const MonodromyReport& v);
void from_json(const nlohmann::json& j, MonodromyReport& v);
void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);
void to_json(nlohmann::json& j, const SearchBounds& v);
void from_json(const nlohmann::json& j, SearchBounds& v);
void to_json(nlohmann::json& j, const AtlasRecord& v);
void from_json(const nlohmann::json& j, AtlasRecord& v);
void to_json(nlohmann::json& j, const DatumSummary& v);
void from_json(const nlohmann::json& j, DatumSummary& v);
void to_json(nlohmann::json& j, const DegenerationResult& v);
void from_json(const nlohmann::json& j, DegenerationResult& v);

// Datum text form: "d=<int> g=<int> theta=<comma-separated ints>".
std::string render_datum_text(const MonodromyDatum& datum);
MonodromyDatum parse_datum_text(const std::string& text);

// Splits a comma-separated exponent list and reduces each entry mod d, so
// negative representatives are accepted (-1 becomes d-1). Entries reducing
// to 0 are rejected by the subsequent validate call, not here.
std::vector<Int> parse_theta_list(const std::string& text, Int d);

// Report fragments.
std::string render_profile(const EigenspaceProfile& profile);  // "m = [..]"
std::string render_verdict_human(const AtlasRecord& record);
std::string render_summary_human(const DatumSummary& summary);
std::string render_degeneration_human(const MonodromyDatum& original,
                                      const DegenerationResult& step);

// CSV: one row per datum, stable column set shared by every subcommand.
std::string csv_header();
std::string csv_row(const DatumSummary& summary);
std::string csv_row(const AtlasRecord& record);

// Atlas files are JSON lines: a header object carrying schema name, schema
// version, bounds and tool version, then one record per line sorted by
// canonical key.
void write_atlas(std::ostream& out, const SearchBounds& bounds,
                 const std::vector<AtlasRecord>& records);

struct AtlasFile {
  SearchBounds bounds;
  std::string tool_version;
  std::vector<AtlasRecord> records;
};

// Throws InputError(SchemaMismatch) for a wrong schema name or version and
// InputError(CorruptAtlas) for anything unparseable.
AtlasFile read_atlas(std::istream& in);
AtlasFile read_atlas_file(const std::string& path);
void write_atlas_file(const std::string& path, const SearchBounds& bounds,
                      const std::vector<AtlasRecord>& records);

// Dotted path of the first difference between two JSON values ("" if equal).
std::string first_json_difference(const nlohmann::json& a,
                                  const nlohmann::json& b);

}  // namespace cycmon
