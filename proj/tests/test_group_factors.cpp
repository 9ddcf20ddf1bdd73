#include <doctest.h>

#include <algorithm>
#include <random>

#include "cycmon/group_factors.hpp"
#include "generators.hpp"

using namespace cycmon;

TEST_CASE("decompose emits one factor per conjugate character pair") {
  // double cover profile (h, g-h) -> Sp(2h) x Sp(2(g-h))
  const auto d2 = decompose(chevalley_weil(validate(2, 1, {1, 1, 1, 1})), 1);
  REQUIRE(d2.factors.size() == 2);
  CHECK(d2.factors[0].kind == FactorKind::Symplectic);
  CHECK(d2.factors[0].p == 1);
  CHECK(d2.factors[1].kind == FactorKind::Symplectic);
  CHECK(d2.factors[1].p == 2);

  // ramified triple cover -> Sp(2h) x SU(d2, d1)
  const auto d3 = decompose(chevalley_weil(validate(3, 1, {1, 1, 1})), 1);
  REQUIRE(d3.factors.size() == 2);
  CHECK(d3.factors[1].kind == FactorKind::Unitary);
  CHECK(std::min(d3.factors[1].p, d3.factors[1].q) == 1);
  CHECK(std::max(d3.factors[1].p, d3.factors[1].q) == 2);

  const auto d4 = decompose(chevalley_weil(validate(4, 0, {1, 1, 1, 1})), 0);
  REQUIRE(d4.factors.size() == 3);
  CHECK(d4.factors[0].p == 0);
  CHECK(d4.factors[1].kind == FactorKind::Unitary);
  CHECK(d4.factors[1].p == 0);
  CHECK(d4.factors[1].q == 2);
  CHECK(d4.factors[1].is_compact);
  CHECK(!d4.factors[1].is_positive);
  CHECK(d4.factors[2].kind == FactorKind::Symplectic);
  CHECK(d4.factors[2].p == 1);
  CHECK(d4.factors[2].is_positive);
}

TEST_CASE("no_repeating compares unordered signatures of positive factors") {
  const auto factors_of = [](const MonodromyDatum& datum) {
    return decompose(chevalley_weil(datum), datum.genus_base);
  };

  CHECK(no_repeating(factors_of(validate(2, 1, {1, 1, 1, 1}))));
  CHECK(no_repeating(factors_of(validate(3, 1, {1, 1, 1}))));
  // unramified quintic over genus 2: m_i = 1 for i != 0, two SU(1,1) factors
  CHECK(!no_repeating(factors_of(validate(5, 2, {}))));
  // one positive factor only
  CHECK(no_repeating(factors_of(validate(4, 0, {1, 1, 1, 1}))));
  // U(1,2) against U(2,1) repeats as unordered sets
  CHECK(!no_repeating(factors_of(validate(6, 1, {2, 2, 2}))));
}

TEST_CASE("delta gives the symmetric-space dimensions") {
  CHECK(delta(GroupFactor{FactorKind::Unitary, 5, 0, 1, false, true}) == 0);
  CHECK(delta(GroupFactor{FactorKind::Unitary, 2, 1, 1, true, false}) == 2);
  CHECK(delta(GroupFactor{FactorKind::Unitary, 1, 2, 1, true, false}) == 2);
  CHECK(delta(GroupFactor{FactorKind::Symplectic, 3, 0, 0, true, false}) == 6);
  CHECK(delta(GroupFactor{FactorKind::Symplectic, 0, 0, 0, false, false}) == 0);
}

TEST_CASE("dim_special worked values") {
  // double cover: h(h+1)/2 + (g-h)(g-h+1)/2
  const auto bi = validate(2, 1, {1, 1, 1, 1, 1, 1});  // g = 4, h = 1
  CHECK(dim_special(decompose(chevalley_weil(bi), 1)) == 1 + 6);

  // unramified triple over genus h: h(h+1)/2 + (h-1)^2
  const auto tri = validate(3, 3, {});
  CHECK(dim_special(decompose(chevalley_weil(tri), 3)) == 6 + 4);

  CHECK(dim_special(decompose(chevalley_weil(validate(4, 0, {1, 1, 1, 1})), 0)) == 1);
}

TEST_CASE("Sym^2 route agrees with the factor route") {
  {
    // profile of (3,0,[1,2,1,2]) is (0,1,1): single mixed pair
    const auto profile = chevalley_weil(validate(3, 0, {1, 2, 1, 2}));
    CHECK(profile.multiplicities == std::vector<Int>{0, 1, 1});
    CHECK(dim_special_via_sym2(profile) == 1);
  }
  {
    // no branching contributions at all: trivial character self term only
    EigenspaceProfile flat{5, {2, 0, 0, 0, 0}};
    CHECK(dim_special_via_sym2(flat) == 3);
  }
  std::mt19937 rng(505);
  for (int iter = 0; iter < 300; ++iter) {
    const auto datum = testing::random_valid_datum(rng);
    const auto profile = chevalley_weil(datum);
    CHECK(dim_special(decompose(profile, datum.genus_base)) ==
          dim_special_via_sym2(profile));
  }
}

TEST_CASE("compact flag matches vanishing delta on a housed eigenspace") {
  std::mt19937 rng(606);
  for (int iter = 0; iter < 200; ++iter) {
    const auto datum = testing::random_valid_datum(rng);
    const auto factors = decompose(chevalley_weil(datum), datum.genus_base);
    CHECK(static_cast<Int>(factors.factors.size()) == datum.d / 2 + 1);
    for (const auto& f : factors.factors) {
      const bool houses_nonzero =
          f.kind == FactorKind::Unitary ? f.p + f.q > 0 : f.p > 0;
      const bool expected =
          f.kind == FactorKind::Unitary && delta(f) == 0 && houses_nonzero;
      CHECK(f.is_compact == expected);
    }
  }
}

TEST_CASE("no_repeating is a canonicalization invariant") {
  std::mt19937 rng(707);
  for (int iter = 0; iter < 200; ++iter) {
    const auto datum = testing::random_valid_datum(rng);
    const auto canonical = canonicalize(datum).datum;
    CHECK(no_repeating(decompose(chevalley_weil(datum), datum.genus_base)) ==
          no_repeating(decompose(chevalley_weil(canonical), canonical.genus_base)));
  }
}

TEST_CASE("SU(1,1) / Sp(2) coincidence advisory") {
  // d = 4 over an elliptic base with theta (1,3): U(1,1) and Sp(2) coexist
  CHECK(su11_sp2_coincidence(decompose(chevalley_weil(validate(4, 1, {1, 3})), 1)));
  CHECK(!su11_sp2_coincidence(decompose(chevalley_weil(validate(4, 1, {2, 2})), 1)));
}

TEST_CASE("factor rendering") {
  const auto d4 = decompose(chevalley_weil(validate(4, 0, {1, 1, 1, 1})), 0);
  CHECK(render_factor(d4.factors[0]) == "Sp(0) [trivial-char]");
  CHECK(render_factor(d4.factors[1]) == "SU(0,2) [compact]");
  CHECK(render_factor(d4.factors[2]) == "Sp(2)");
  CHECK(render_factor_product({d4.factors[1], d4.factors[2]}) ==
        "SU(0,2) [compact] x Sp(2)");
  CHECK(render_factor_product({}) == "1");
}
