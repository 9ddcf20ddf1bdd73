#include <doctest.h>

#include <random>

#include "cycmon/degeneration.hpp"
#include "cycmon/eigenspaces.hpp"
#include "generators.hpp"

using namespace cycmon;

TEST_CASE("pinching a handle appends the exponent pair {1, d-1}") {
  const auto step = delta0_degenerate(validate(3, 1, {1, 1, 1}));
  CHECK(step.normalized == validate(3, 0, {1, 1, 1, 1, 2}));
  CHECK(step.genus_drop == 1);
  CHECK(step.prym_dim == 3);

  const auto bielliptic = delta0_degenerate(validate(2, 2, {1, 1}));
  CHECK(bielliptic.normalized == validate(2, 1, {1, 1, 1, 1}));
  CHECK(total_genus(bielliptic.normalized) == total_genus(validate(2, 2, {1, 1})) - 1);

  CHECK_THROWS_WITH_AS(delta0_degenerate(validate(4, 0, {1, 1, 1, 1})),
                       doctest::Contains("BaseGenusZero"), InputError);
}

TEST_CASE("nontrivial multiplicities survive the degeneration") {
  CHECK(check_profile_preservation(validate(3, 1, {1, 1, 1})));
  CHECK(check_profile_preservation(validate(2, 2, {1, 1})));

  std::mt19937 rng(808);
  for (int iter = 0; iter < 300; ++iter) {
    const auto datum = testing::random_valid_datum(rng);
    if (datum.genus_base < 1) continue;
    CHECK(check_profile_preservation(datum));
  }
}

TEST_CASE("prym_dimension is the genus excess") {
  CHECK(prym_dimension(validate(3, 1, {1, 1, 1})) == 3);
  for (Int h = 1; h <= 3; ++h) {
    const Int r = 4;
    const auto datum = validate(2, h, std::vector<Int>(r, 1));
    CHECK(prym_dimension(datum) == total_genus(datum) - h);
  }
}

TEST_CASE("iterated degeneration reaches the line with constant prym") {
  std::mt19937 rng(909);
  for (int iter = 0; iter < 100; ++iter) {
    auto datum = testing::random_valid_datum(rng, 10, 3, 6);
    const Int prym = prym_dimension(datum);
    Int steps = 0;
    while (datum.genus_base >= 1) {
      const auto step = delta0_degenerate(datum);
      CHECK(step.genus_drop == 1);
      CHECK(step.prym_dim == prym);
      CHECK(prym_dimension(step.normalized) == prym);
      datum = step.normalized;
      ++steps;
    }
    CHECK(datum.genus_base == 0);
    CHECK(steps <= 3);
  }
}
