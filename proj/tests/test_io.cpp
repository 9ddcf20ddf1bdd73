#include <doctest.h>

#include <random>
#include <sstream>

#include "cycmon/degeneration.hpp"
#include "cycmon/io.hpp"
#include "generators.hpp"

using namespace cycmon;
using nlohmann::json;

namespace {

template <typename T>
T roundtrip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

}  // namespace

TEST_CASE("json round-trips every record type") {
  std::mt19937 rng(1234);
  const auto bounds = SearchBounds::for_total_genus(1, 6);
  for (int iter = 0; iter < 100; ++iter) {
    const auto datum = testing::random_valid_datum(rng);
    CHECK(roundtrip(datum) == datum);
    CHECK(roundtrip(canonicalize(datum)) == canonicalize(datum));
    CHECK(roundtrip(chevalley_weil(datum)) == chevalley_weil(datum));
    const auto factors = decompose(chevalley_weil(datum), datum.genus_base);
    CHECK(roundtrip(factors) == factors);
    CHECK(roundtrip(summarize(canonicalize(datum))) == summarize(canonicalize(datum)));
    if (datum.genus_base >= 1) {
      const auto step = delta0_degenerate(datum);
      CHECK(roundtrip(step) == step);
    }
  }
  CHECK(roundtrip(bounds) == bounds);
  SearchBounds fixed = bounds;
  fixed.d_fixed = 3;
  fixed.genus_base_fixed = 0;
  CHECK(roundtrip(fixed) == fixed);
  for (const auto& record : scan_special(bounds)) {
    CHECK(roundtrip(record) == record);
    CHECK(roundtrip(record.verdict) == record.verdict);
  }
}

TEST_CASE("datum text form") {
  const auto datum = validate(3, 1, {1, 1, 1});
  CHECK(render_datum_text(datum) == "d=3 g=1 theta=1,1,1");
  CHECK(parse_datum_text("d=3 g=1 theta=1,1,1") == datum);
  CHECK(render_datum_text(validate(5, 2, {})) == "d=5 g=2 theta=");
  CHECK(parse_datum_text("d=5 g=2 theta=") == validate(5, 2, {}));

  std::mt19937 rng(77);
  for (int iter = 0; iter < 100; ++iter) {
    const auto x = testing::random_valid_datum(rng);
    CHECK(parse_datum_text(render_datum_text(x)) == x);
  }

  CHECK_THROWS_AS(parse_datum_text("d=3 theta=1,1,1"), InputError);
  CHECK_THROWS_AS(parse_datum_text("d=3 g=0 theta=1,x"), InputError);
}

TEST_CASE("theta parsing reduces mod d, negatives included") {
  CHECK(parse_theta_list("1,-1", 3) == std::vector<Int>{1, 2});
  CHECK(parse_theta_list(" 4 , 7 ", 3) == std::vector<Int>{1, 1});
  CHECK(parse_theta_list("", 5).empty());
  CHECK(parse_theta_list("3", 3) == std::vector<Int>{0});  // rejected by validate
  CHECK_THROWS_AS(parse_theta_list("one", 3), InputError);
}

TEST_CASE("profile and csv rendering") {
  const auto datum = validate(3, 1, {1, 1, 1});
  CHECK(render_profile(chevalley_weil(datum)) == "m = [1, 1, 2]");

  const auto record = make_record(canonicalize(datum), std::string("adhoc"));
  CHECK(csv_header() == "d,genus_base,theta,genus,dim_family,dim_sg,no_repeating,status");
  CHECK(csv_row(record) == "3,1,\"1,1,1\",4,3,3,true,TotallyGeodesicAndSpecial");

  const auto rigid = summarize(canonicalize(validate(3, 0, {1, 1, 1})));
  CHECK(csv_row(rigid) == "3,0,\"1,1,1\",1,0,0,true,ZeroDimensionalFamily");
}

TEST_CASE("human verdict rendering carries the headline facts") {
  const auto record = make_record(canonicalize(validate(3, 1, {1, 1, 1})), std::string("x"));
  const auto text = render_verdict_human(record);
  CHECK(text.find("d=3 g=1 theta=1,1,1") != std::string::npos);
  CHECK(text.find("m = [1, 1, 2]") != std::string::npos);
  CHECK(text.find("TotallyGeodesicAndSpecial") != std::string::npos);
  CHECK(text.find("Exact") != std::string::npos);
}

TEST_CASE("atlas files round-trip and reject bad headers") {
  const auto bounds = SearchBounds::for_total_genus(1, 5);
  const auto records = scan_special(bounds);

  std::ostringstream out;
  write_atlas(out, bounds, records);
  {
    std::istringstream in(out.str());
    const auto file = read_atlas(in);
    CHECK(file.bounds == bounds);
    CHECK(file.records == records);
    CHECK(file.tool_version == kToolVersion);
  }
  {
    std::istringstream in("{\"schema\":\"something-else\",\"schema_version\":1}\n");
    CHECK_THROWS_WITH_AS(read_atlas(in), doctest::Contains("SchemaMismatch"), InputError);
  }
  {
    std::istringstream in(
        "{\"schema\":\"cycmon-atlas\",\"schema_version\":999,\"bounds\":{},"
        "\"tool_version\":\"0\"}\n");
    CHECK_THROWS_WITH_AS(read_atlas(in), doctest::Contains("SchemaMismatch"), InputError);
  }
  {
    std::istringstream in("not json at all\n");
    CHECK_THROWS_WITH_AS(read_atlas(in), doctest::Contains("CorruptAtlas"), InputError);
  }
  {
    std::istringstream in(out.str() + "{\"broken\":\n");
    CHECK_THROWS_WITH_AS(read_atlas(in), doctest::Contains("CorruptAtlas"), InputError);
  }
}

TEST_CASE("first_json_difference walks nested fields") {
  const json a = {{"x", 1}, {"y", {{"z", {1, 2, 3}}}}};
  json b = a;
  CHECK(first_json_difference(a, b).empty());
  b["y"]["z"][1] = 9;
  CHECK(first_json_difference(a, b) == "y.z[1]");
  b = a;
  b["x"] = 2;
  CHECK(first_json_difference(a, b) == "x");
}
