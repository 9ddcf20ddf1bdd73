#include <doctest.h>

#include <algorithm>
#include <random>

#include "cycmon/eigenspaces.hpp"
#include "generators.hpp"

using namespace cycmon;

TEST_CASE("Chevalley-Weil worked profiles") {
  CHECK(chevalley_weil(validate(4, 0, {1, 1, 1, 1})).multiplicities ==
        std::vector<Int>{0, 0, 1, 2});
  CHECK(chevalley_weil(validate(3, 1, {1, 1, 1})).multiplicities ==
        std::vector<Int>{1, 1, 2});

  // double cover (2, h, [1]^r): profile (h, g - h)
  for (Int h = 0; h <= 3; ++h) {
    const Int r = 2 * (h + 2) - 4 * h + 2;  // g = h + 2
    if (r < 1) continue;
    const auto datum = validate(2, h, std::vector<Int>(static_cast<std::size_t>(r), 1));
    const auto profile = chevalley_weil(datum);
    CHECK(profile.multiplicities[0] == h);
    CHECK(profile.multiplicities[1] == total_genus(datum) - h);
  }

  // ramified triple cover with m canceling pairs and n = r - 2m ones:
  // m_{chi_2} = h - 1 + (2r - m)/3, m_{chi_1} = h - 1 + (r + m)/3
  for (Int h = 1; h <= 3; ++h) {
    for (Int m = 0; m <= 3; ++m) {
      for (Int n = 0; n <= 6; n += 3) {
        const Int r = 2 * m + n;
        if (r == 0) continue;
        std::vector<Int> theta(static_cast<std::size_t>(m + n), 1);
        theta.insert(theta.end(), static_cast<std::size_t>(m), 2);
        const auto profile = chevalley_weil(validate(3, h, std::move(theta)));
        CHECK(profile.multiplicities[2] == h - 1 + (2 * r - m) / 3);
        CHECK(profile.multiplicities[1] == h - 1 + (r + m) / 3);
      }
    }
  }
}

TEST_CASE("trivial character carries the base genus") {
  std::mt19937 rng(101);
  for (int iter = 0; iter < 200; ++iter) {
    const auto datum = testing::random_valid_datum(rng);
    CHECK(chevalley_weil(datum).multiplicities[0] == datum.genus_base);
  }
}

TEST_CASE("multiplicities sum to the genus and ignore exponent order") {
  std::mt19937 rng(202);
  for (int iter = 0; iter < 300; ++iter) {
    const auto datum = testing::random_valid_datum(rng);
    const auto profile = chevalley_weil(datum);

    Int sum = 0;
    for (Int m : profile.multiplicities) sum += m;
    CHECK(sum == total_genus(datum));

    auto shuffled = datum;
    std::shuffle(shuffled.theta.begin(), shuffled.theta.end(), rng);
    CHECK(chevalley_weil(shuffled) == profile);
  }
}

TEST_CASE("canonicalization permutes the nontrivial multiplicities") {
  std::mt19937 rng(303);
  for (int iter = 0; iter < 200; ++iter) {
    const auto datum = testing::random_valid_datum(rng);
    auto before = chevalley_weil(datum).multiplicities;
    auto after = chevalley_weil(canonicalize(datum).datum).multiplicities;
    CHECK(before[0] == after[0]);
    std::sort(before.begin() + 1, before.end());
    std::sort(after.begin() + 1, after.end());
    CHECK(before == after);
  }
}

TEST_CASE("genus-1 bases pair vanishing conjugate eigenspaces") {
  std::mt19937 rng(404);
  for (int iter = 0; iter < 300; ++iter) {
    const auto datum = testing::random_valid_datum(rng, 12, 1, 6);
    if (datum.genus_base != 1) continue;
    const auto m = chevalley_weil(datum).multiplicities;
    for (Int i = 1; i < datum.d; ++i)
      if (m[static_cast<std::size_t>(i)] == 0)
        CHECK(m[static_cast<std::size_t>(datum.d - i)] == 0);
  }
}

TEST_CASE("profile_checks passes real profiles and names tampered rules") {
  const auto datum = validate(4, 0, {1, 1, 1, 1});
  auto profile = chevalley_weil(datum);
  CHECK(profile_checks(profile, datum).all_passed());

  const auto g2 = validate(3, 2, {1, 2});
  CHECK(profile_checks(chevalley_weil(g2), g2).all_passed());

  profile.multiplicities[2] += 1;  // break the sum rule
  const auto report = profile_checks(profile, datum);
  CHECK(!report.all_passed());
  CHECK(report.failures() == "sum-equals-genus");

  // tampered genus-1 profile with an unpaired vanishing eigenspace
  const auto elliptic = validate(3, 1, {1, 1, 1});
  auto broken = chevalley_weil(elliptic);
  broken.multiplicities[1] = 0;
  const auto pairing = profile_checks(broken, elliptic);
  CHECK(pairing.failures().find("conjugate-pairing-genus-1") != std::string::npos);

  // tampered genus-2 profile with a hole
  const auto g2b = validate(3, 2, {1, 2});
  auto holed = chevalley_weil(g2b);
  holed.multiplicities[2] = 0;
  CHECK(profile_checks(holed, g2b).failures().find("positive-for-base-genus-2") !=
        std::string::npos);
}
