#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "regmod/core_arith.hpp"
#include "regmod/extremal.hpp"

using namespace regmod;
using doctest::Approx;

static const u64 kYs[4] = {1000, 10000, 100000, 1000000};

TEST_CASE("the minimizing sequence approaches its limit from above") {
  auto samples = minimal_order_sequence(std::span<const u64>(kYs, 4));
  REQUIRE(samples.size() == 4);
  // ratio / limit, frozen against an independent evaluation
  const double want[4] = {1.1396, 1.0877, 1.0650, 1.0521};
  for (int i = 0; i < 4; ++i) {
    CHECK(samples[i].limit == Approx(std::exp(-kEulerGamma)).epsilon(1e-14));
    CHECK(samples[i].ratio / samples[i].limit == Approx(want[i]).epsilon(2e-4));
    CHECK(samples[i].deviation == Approx(samples[i].ratio / samples[i].limit - 1).epsilon(1e-10));
    CHECK(samples[i].ratio >= samples[i].limit);
    if (i > 0) CHECK(samples[i].ratio < samples[i - 1].ratio);
  }
  CHECK_THROWS_AS(minimal_order_sequence(std::vector<u64>{2}), std::domain_error);
}

TEST_CASE("the maximizing sequence approaches its limit") {
  auto samples = maximal_order_sequence(std::span<const u64>(kYs, 4));
  REQUIRE(samples.size() == 4);
  const double want[4] = {1.0104, 1.0024, 1.0006, 1.0001};
  for (int i = 0; i < 4; ++i) {
    CHECK(samples[i].limit == Approx(std::exp(kEulerGamma)).epsilon(1e-14));
    CHECK(samples[i].ratio / samples[i].limit == Approx(want[i]).epsilon(2e-4));
    if (i > 0) CHECK(samples[i].deviation < samples[i - 1].deviation);
  }
  // log n along the primorials is theta(y), which is close to y
  CHECK(samples[3].log_n > 0.9e6);
  CHECK(samples[3].log_n < 1.1e6);
  CHECK_THROWS_AS(maximal_order_sequence(std::vector<u64>{1}), std::domain_error);
}

TEST_CASE("exact small-range extremal facts") {
  CHECK(trivial_extremes_check(10000) == 0);
  CHECK(cube_ratio_check(10000) == 0);
  CHECK_THROWS_AS(trivial_extremes_check(1), std::domain_error);
}

TEST_CASE("gamma constants") {
  GammaConstants g = gamma_constants();
  CHECK(g.gamma == Approx(0.5772156649015329).epsilon(1e-15));
  CHECK(g.e_gamma == Approx(1.7810724179901979).epsilon(1e-14));
  CHECK(g.e_neg_gamma == Approx(0.5614594835668851).epsilon(1e-14));
  CHECK(g.e_gamma * g.e_neg_gamma == Approx(1.0).epsilon(1e-14));
}
