#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cycmon/io.hpp"
#include "cycmon/reference.hpp"

using namespace cycmon;

namespace {

SearchBounds window(Int d_max, Int gp_max, Int g_max) {
  SearchBounds b;
  b.d_max = d_max;
  b.genus_base_max = gp_max;
  b.genus_max = g_max;
  return b;
}

std::set<std::vector<Int>> theta_set(const std::vector<CanonicalDatum>& data) {
  std::set<std::vector<Int>> out;
  for (const auto& c : data) out.insert(c.datum.theta);
  return out;
}

}  // namespace

TEST_CASE("enumerate_data hand-checked windows") {
  {
    auto b = window(2, 1, 3);
    b.d_fixed = 2;
    b.genus_base_fixed = 1;
    const auto data = enumerate_data(b);
    CHECK(theta_set(data) ==
          std::set<std::vector<Int>>{{1, 1}, {1, 1, 1, 1}});
  }
  {
    auto b = window(3, 0, 1);
    b.d_fixed = 3;
    b.genus_base_fixed = 0;
    CHECK(theta_set(enumerate_data(b)) == std::set<std::vector<Int>>{{1, 1, 1}});
  }
  {
    // one genus higher also admits the two canceling pairs
    auto b = window(3, 0, 2);
    b.d_fixed = 3;
    b.genus_base_fixed = 0;
    CHECK(theta_set(enumerate_data(b)) ==
          std::set<std::vector<Int>>{{1, 1, 1}, {1, 1, 2, 2}});
  }
  {
    // empty window: no degree-5 cover of the line has genus <= 1
    auto b = window(5, 0, 1);
    b.d_fixed = 5;
    CHECK(enumerate_data(b).empty());
  }
}

TEST_CASE("enumeration is ordered, canonical and duplicate-free") {
  const auto data = enumerate_data(window(8, 3, 8));
  for (std::size_t i = 0; i < data.size(); ++i) {
    CHECK(is_canonical(data[i].datum));
    if (i > 0) CHECK(datum_less(data[i - 1].datum, data[i].datum));
  }
}

TEST_CASE("oversized windows are rejected up front") {
  auto b = window(200, 50, 200);
  b.tuple_cap = 1000;
  CHECK_THROWS_WITH_AS(enumerate_data(b), doctest::Contains("BoundsTooLarge"),
                       InputError);
  b.tuple_cap = SearchBounds{}.tuple_cap;
  CHECK(estimate_candidates(b) > 1000.0);
}

TEST_CASE("worker count never changes scan output") {
  const auto bounds = SearchBounds::for_total_genus(1, 10);
  const auto serial = scan_special(bounds, 1);
  CHECK(serial == scan_special(bounds, 4));
  CHECK(enumerate_data(bounds, 1) == enumerate_data(bounds, 3));
}

TEST_CASE("double-cover loci table") {
  using P = std::pair<Int, Int>;
  CHECK(scan_double_loci(0).empty());
  CHECK(scan_double_loci(1) == std::vector<P>{{1, 0}});
  CHECK(scan_double_loci(25) == std::vector<P>{{1, 0}, {2, 0}, {2, 1}, {3, 1}});
}

TEST_CASE("triple-cover loci table") {
  using T = std::array<Int, 4>;
  CHECK(scan_triple_loci(2) == std::vector<T>{{2, 0, 4, 2}});
  CHECK(scan_triple_loci(25) ==
        std::vector<T>{{2, 0, 4, 2}, {3, 0, 5, 1}, {3, 1, 2, 1}, {4, 0, 6, 0}, {4, 1, 3, 0}});
}

TEST_CASE("frozen census of special families up to genus 7") {
  const auto records = scan_special(SearchBounds::for_total_genus(1, 7));
  CHECK(records.size() == 25);

  std::size_t base0 = 0, base1 = 0, base2 = 0;
  std::set<std::string> genus1_keys;
  for (const auto& r : records) {
    const Int gp = r.datum.datum.genus_base;
    base0 += gp == 0;
    base1 += gp == 1;
    base2 += gp >= 2;
    if (gp == 1) genus1_keys.insert(render_datum_text(r.datum.datum));
    CHECK(r.verdict.status == Status::TotallyGeodesicAndSpecial);
    CHECK(r.genus <= 7);
  }
  const auto has = [&](const char* key) {
    for (const auto& r : records)
      if (render_datum_text(r.datum.datum) == key) return true;
    return false;
  };
  CHECK(has("d=4 g=0 theta=1,1,1,1"));
  // covers of the line: the classical list of twenty cyclic families
  CHECK(base0 == 20);
  // elliptic base: the two double, two triple and one quartic family
  CHECK(base1 == 5);
  CHECK(genus1_keys == std::set<std::string>{
                           "d=2 g=1 theta=1,1",
                           "d=2 g=1 theta=1,1,1,1",
                           "d=3 g=1 theta=1,2",
                           "d=3 g=1 theta=1,1,1",
                           "d=4 g=1 theta=2,2",
                       });
  // no star family has a base of genus two or more
  CHECK(base2 == 0);
}

TEST_CASE("records are recomputable from their datum") {
  const auto bounds = SearchBounds::for_total_genus(1, 7);
  for (const auto& r : scan_special(bounds)) {
    const auto again = make_record(r.datum, bounds);
    CHECK(again == r);
    CHECK(again.profile == chevalley_weil(r.datum.datum));
  }
}

TEST_CASE("fast enumeration matches the orbit-dedup reference") {
  const auto bounds = window(6, 3, 6);
  const auto fast = enumerate_data(bounds);
  const auto ref = reference_enumerate(bounds);
  REQUIRE(fast.size() == ref.size());
  for (std::size_t i = 0; i < fast.size(); ++i)
    CHECK(orbit_equivalent(fast[i].datum, ref[i]));
}

TEST_CASE("regression_compare against a stored atlas") {
  const auto bounds = SearchBounds::for_total_genus(1, 5);
  const auto records = scan_special(bounds);
  REQUIRE(!records.empty());
  const std::string path = "test_atlas_tmp.jsonl";
  write_atlas_file(path, bounds, records);

  SUBCASE("identical rerun diffs empty") {
    CHECK(regression_compare(path, records).empty());
  }

  SUBCASE("widened window adds records only") {
    const auto wider = scan_special(SearchBounds::for_total_genus(1, 6));
    const auto diff = regression_compare(path, wider);
    CHECK(diff.removed.empty());
    CHECK(diff.changed.empty());
    CHECK(diff.added.size() == wider.size() - records.size());
  }

  SUBCASE("hand-edited record shows up as changed, naming the field") {
    auto tampered = records;
    tampered[0].genus += 1;
    const auto diff = diff_records(read_atlas_file(path).records, tampered);
    REQUIRE(diff.changed.size() == 1);
    CHECK(diff.changed[0].field == "genus");
    CHECK(diff.added.empty());
    CHECK(diff.removed.empty());
  }

  SUBCASE("metadata differences are not record changes") {
    auto restamped = records;
    for (auto& r : restamped) r.bounds_hash = "feedfeedfeedfeed";
    CHECK(diff_records(records, restamped).empty());
  }
}

TEST_CASE("summarize covers rigid data without a verdict") {
  const auto rigid = summarize(canonicalize(validate(3, 0, {1, 1, 1})));
  CHECK(rigid.genus == 1);
  CHECK(rigid.dim_family == 0);
  CHECK(!rigid.status.has_value());

  const auto moving = summarize(canonicalize(validate(3, 0, {1, 1, 2, 2})));
  REQUIRE(moving.status.has_value());
  CHECK(*moving.status == Status::TotallyGeodesicAndSpecial);
}
