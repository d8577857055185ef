#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "regmod/asymptotics.hpp"
#include "regmod/core_arith.hpp"

using namespace regmod;
using doctest::Approx;

TEST_CASE("the multiplicative building blocks f, v, h") {
  CHECK(f_at_prime_power(2, 0) == Rational(1));
  CHECK(f_at_prime_power(2, 1) == Rational(1, 2));
  CHECK(f_at_prime_power(2, 2) == Rational(2, 3));
  CHECK(f_at_prime_power(3, 2) == Rational(6, 7));

  CHECK(v_at_prime_power(2, 0) == Rational(1));
  CHECK(v_at_prime_power(2, 2) == Rational(1, 6));
  for (u64 p : {2ull, 3ull, 5ull, 101ull}) CHECK(v_at_prime_power(p, 1) == Rational(0));
  // |v(p^2)| <= 1/p, exactly
  for (u32 p : primes_up_to(100)) {
    Rational v = v_at_prime_power(p, 2);
    if (v < 0) v = -v;
    CHECK(v <= Rational(1, p));
  }

  CHECK(h_at_prime_power(2, 1) == Rational(-1, 2));
  CHECK(h_at_prime_power(2, 2) == Rational(-1, 6));
  CHECK(h_at_prime_power(3, 2) == Rational(-1, 42));
  // |h(n)| phi(n)^2 <= 1 for every n: each factor is phi/(phi+1) < 1
  for (u64 n = 1; n <= 3000; ++n) {
    Rational h = h_of(factor(n));
    if (h < 0) h = -h;
    u64 ph = euler_phi(n);
    CHECK(h * Rational(ph) * Rational(ph) <= Rational(1));
  }
}

TEST_CASE("v stays within its normalized envelope") {
  // sup over prime powers of |v(p^nu) - (nu-1)/p^(nu-1)| * p^nu is about
  // 3.52900, approached along powers of 2; 3.53 is a safe ceiling.
  for (u32 p : primes_up_to(316)) {
    u64 pv = p;
    for (u32 nu = 1; pv <= 100000; ++nu, pv *= p) {
      double v = static_cast<double>(v_at_prime_power(p, nu));
      double center = static_cast<double>(nu - 1) / std::pow(p, nu - 1);
      CHECK(std::fabs(v - center) * static_cast<double>(pv) <= 3.53);
      if (pv > 100000 / p) break;
    }
  }
}

TEST_CASE("the three exact identities hold") {
  IdentityReport rep = verify_identities(2000);
  CHECK(rep.ok());
  CHECK(rep.checked == 2000);
}

TEST_CASE("checkpoint schedule") {
  auto s = checkpoint_schedule(1000000);
  CHECK(s.front() == 1);
  CHECK(s.back() == 1000000);
  for (u64 c : {1000ull, 512000ull, 100000ull, 10ull}) CHECK(std::count(s.begin(), s.end(), c) == 1);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(checkpoint_schedule(999) == std::vector<u64>({1, 10, 100, 999}));
  CHECK_THROWS_AS(checkpoint_schedule(0), std::domain_error);
}

TEST_CASE("partial sums at the decade checkpoints") {
  ArithmeticTable t = sieve_table(1000000);
  std::vector<u64> cps = {100, 1000, 10000, 100000, 1000000};
  auto rows = partial_sums(t, cps);
  REQUIRE(rows.size() == 5);

  CHECK(rows[0].sum_rho == 4427);
  CHECK(rows[1].sum_rho == 440876);
  CHECK(rows[2].sum_rho == 44076690);
  CHECK(rows[3].sum_rho == 4407574808ull);
  CHECK(rows[4].sum_rho == 440756903048ull);

  CHECK(rows[2].sum_rho_over_phi == Approx(16448.6380359737).epsilon(1e-10));
  CHECK(rows[2].sum_phi_over_rho == Approx(6875.83457490826).epsilon(1e-10));
  CHECK(rows[2].sum_recip_rho == Approx(11.2412208080664).epsilon(1e-11));
  CHECK(rows[4].sum_rho_over_phi == Approx(1644933.21534718).epsilon(1e-10));
  CHECK(rows[4].sum_phi_over_rho == Approx(687570.37208595).epsilon(1e-10));
  CHECK(rows[4].sum_recip_rho == Approx(16.7198635175482).epsilon(1e-11));

  SUBCASE("error terms settle once the constants are applied") {
    SweepConstants k;
    k.a = constant_A(100000).value;
    k.b = constant_B().value;
    k.c = constant_C(100000, 30).value;
    k.d = constant_D(100000, 60).value;
    k.e = estimate_E(std::span<const PartialSumRow>(rows).subspan(2), k.d).value;
    apply_error_terms(rows, k);
    for (const auto& r : rows) {
      double x = static_cast<double>(r.x);
      if (r.x >= 10000) {
        CHECK(std::fabs(r.err_rho) / (x * std::log(x)) < 0.02);
        CHECK(std::fabs(r.err_b) / (std::log(x) * std::log(x)) < 0.02);
        // c is pinned at mid-bracket, so the defect per unit x is at most
        // the bracket width plus the finite-x drift
        CHECK(std::fabs(r.err_c) / x < 3e-5);
      }
    }
    CHECK(std::fabs(rows[4].err_d) < 1e-3);
  }

  SUBCASE("checkpoints must be ascending and in range") {
    std::vector<u64> bad = {10, 10};
    CHECK_THROWS_AS(partial_sums(t, bad), std::domain_error);
    std::vector<u64> out = {10, 2000000};
    CHECK_THROWS_AS(partial_sums(t, out), std::domain_error);
  }
}

TEST_CASE("zeta values") {
  // independent route: plain descending sum over 2e6 terms with the
  // leading tail correction only
  double mine = 0;
  for (double n = 2000000; n >= 1; n -= 1) mine += 1.0 / (n * n * n);
  mine += 0.5 / (2000000.0 * 2000000.0);
  CHECK(std::fabs(zeta3() - mine) < 2e-9);
  CHECK(zeta3() == Approx(1.2020569031595943).epsilon(1e-13));
  CHECK(constant_K().value == Approx(1.943596436821).epsilon(1e-11));
}

TEST_CASE("the mean-value constant via its two product forms") {
  ConstantAForms f = constant_A_forms(10000);
  CHECK(std::fabs(f.product_form - f.zeta_form) < 1e-8);
  ConstantEstimate a = constant_A(100000);
  CHECK(a.value == Approx(0.881513839725).epsilon(1e-9));
  CHECK(a.lower <= a.value);
  CHECK(a.value <= a.upper);
  CHECK(a.upper - a.lower < 1e-9);
  CHECK_THROWS_AS(constant_A(1), std::domain_error);
}

TEST_CASE("the reciprocal-density constant is enclosed") {
  ConstantEstimate b = constant_B();
  CHECK(b.value == Approx(1.6449340668482264).epsilon(1e-14));

  ConstantEstimate c = constant_C(100000, 30);
  CHECK(c.lower <= c.value);
  CHECK(c.value <= c.upper);
  CHECK(c.upper - c.lower < 2e-5);
  CHECK(c.lower <= 0.6875702044);
  CHECK(0.6875702044 <= c.upper);
  // the degenerate single-prime product: cutoff 2 keeps only p = 2, and the
  // no-tail side is exactly that one factor, (1/2)(1 + (1/2) sum + 2^-60)
  ConstantEstimate c2 = constant_C(2, 60);
  CHECK(c2.upper == Approx(0.8161249450871111).epsilon(1e-12));
  CHECK_THROWS_AS(constant_C(100, 0), std::domain_error);
}

TEST_CASE("the logarithmic-density constant") {
  ConstantEstimate d = constant_D(100000, 60);
  CHECK(d.value == Approx(1.189705169865).epsilon(1e-9));
  CHECK(d.lower <= 1.1897042224);
  CHECK(1.1897042224 <= d.upper * (1 + 1e-9));
  CHECK_THROWS_AS(constant_D(100000, 0), std::domain_error);
}

TEST_CASE("intercept and slope recovery from a real sweep") {
  ArithmeticTable t = sieve_table(100000);
  auto cps = checkpoint_schedule(100000);
  auto rows = partial_sums(t, cps);
  std::vector<PartialSumRow> late;
  for (const auto& r : rows)
    if (r.x >= 3125) late.push_back(r);  // max(1000, max_x / 32)

  double d_ref = constant_D(100000, 60).value;
  InterceptFit e = estimate_E(late, d_ref);
  CHECK(e.rows_used == 7);
  CHECK(std::fabs(e.value - 0.2836124175) < 5e-4);
  CHECK(e.spread < 1e-3);

  LineFit f = fit_recip_rho_line(late);
  CHECK(f.rows_used == 7);
  CHECK(f.slope == Approx(1.1896031787).epsilon(1e-6));
  CHECK(f.intercept == Approx(0.2846195804).epsilon(1e-4));
  CHECK(std::fabs(f.slope / d_ref - 1.0) < 0.02);

  std::vector<PartialSumRow> two(rows.begin(), rows.begin() + 2);
  CHECK_THROWS_AS(estimate_E(two, d_ref), std::domain_error);
  CHECK_THROWS_AS(fit_recip_rho_line(two), std::domain_error);
}

TEST_CASE("coprime-average coefficients") {
  AbPsi one = a_b_psi_of_k(1, 100000);
  CHECK(one.a == Approx(1.0).epsilon(1e-15));
  CHECK(one.psi == 1);
  CHECK(one.b == Approx(-0.6083817348).epsilon(1e-8));

  AbPsi two = a_b_psi_of_k(2, 100000);
  CHECK(two.a == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(two.psi == 3);

  CHECK(a_b_psi_of_k(12, 100000).psi == 24);
  CHECK(a_b_psi_of_k(30, 100000).psi == 72);
  CHECK(a_b_psi_of_k(12, 100000).b > one.b);

  // a(k) <= phi(k)/k is enforced internally; none of these may throw
  for (u64 k = 1; k <= 300; ++k) (void)a_b_psi_of_k(k, 10000);
}

TEST_CASE("series route to the log-density pair") {
  ESeriesResult r = estimate_E_series(20000, 100000);
  CHECK(r.d_value == Approx(1.189704988301).epsilon(1e-8));
  CHECK(std::fabs(r.e_value - 0.283484311747) < 1e-6);
}
