#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "regmod/core_arith.hpp"
#include "regmod/regular.hpp"

using namespace regmod;

// rho and phi for n = 1..30, fixed by hand from the multiplicative formulas.
static const u64 kRho[31] = {0, 1,  2,  3,  3,  5,  6,  7,  5,  7,  10,
                             11, 9,  13, 14, 15, 9,  17, 14, 19, 15, 21,
                             22, 23, 15, 21, 26, 19, 21, 29, 30};
static const u64 kPhi[31] = {0, 1,  1,  2,  2,  4,  2,  6,  4,  6,  4,
                             10, 4,  12, 6,  8,  8,  16, 6,  18, 8,  12,
                             10, 22, 8,  20, 12, 18, 12, 28, 8};

TEST_CASE("golden values for rho and phi up to 30") {
  for (u64 n = 1; n <= 30; ++n) {
    CHECK(rho(n) == kRho[n]);
    CHECK(euler_phi(n) == kPhi[n]);
  }
  CHECK(rho(100) == 63);
  CHECK(rho(1ull << 10) == 513);
  CHECK(rho(9699690) == 9699690);  // squarefree primorial
}

TEST_CASE("the two rho routes and the enumeration agree") {
  for (u64 n = 1; n <= 2000; ++n) {
    CHECK(rho(n) == rho_via_unitary_sum(n));
    CHECK(rho(n) == enumerate_regular(n).size());
  }
  // a value whose unitary divisor structure is wide
  CHECK(rho(963761198400ull) == rho_via_unitary_sum(963761198400ull));
}

TEST_CASE("the regular residues mod 12") {
  CHECK(enumerate_regular(12) == std::vector<u64>({1, 3, 4, 5, 7, 8, 9, 11, 12}));
  CHECK(enumerate_regular(1) == std::vector<u64>{1});
  CHECK(enumerate_regular(2) == std::vector<u64>({1, 2}));
}

TEST_CASE("every characterization agrees on every residue") {
  for (u64 n = 2; n <= 150; ++n)
    for (u64 a = 1; a <= n; ++a) {
      RegularityVerdict v = check_regular(a, n);  // throws on any disagreement
      if (v.regular) {
        REQUIRE(v.witness_x.has_value());
        u64 x = *v.witness_x;
        CHECK(mul_mod(mul_mod(a % n, a % n, n), x, n) == a % n);
        REQUIRE(v.weak_order_k.has_value());
        CHECK(*v.weak_order_k >= 1);
        CHECK(*v.weak_order_k <= euler_phi(n));
        CHECK(pow_mod(a, *v.weak_order_k + 1, n) == a % n);
      } else {
        CHECK_FALSE(v.witness_x.has_value());
        CHECK_FALSE(v.weak_order_k.has_value());
      }
    }
}

TEST_CASE("weak order examples") {
  CHECK(weak_order(1, 7) == 1);
  CHECK(weak_order(3, 12) == 2);          // 3^3 = 27 == 3 (mod 12)
  CHECK_FALSE(weak_order(2, 12).has_value());  // gcd(2,12)=2 is not unitary
  CHECK(weak_order(12, 12) == 1);         // the zero class: 12^2 == 12 (mod 12)
}

TEST_CASE("sum of regular residues") {
  CHECK(regular_sum(12) == 60);  // 12 * (9 + 1) / 2
  for (u64 n = 1; n <= 1000; ++n) {
    auto reg = enumerate_regular(n);
    u64 direct = std::accumulate(reg.begin(), reg.end(), u64(0));
    CHECK(regular_sum(n) == direct);
    CHECK(regular_sum(n) == n * (rho(n) + 1) / 2);
  }
}

TEST_CASE("sum of coprime residues") {
  CHECK_THROWS_AS(sum_coprime(1), std::domain_error);
  for (u64 n = 2; n <= 200; ++n) {
    u64 direct = 0;
    for (u64 a = 1; a <= n; ++a)
      if (std::gcd(a, n) == 1) direct += a;
    CHECK(sum_coprime(n) == direct);
    CHECK(sum_coprime(n) == n * euler_phi(n) / 2);
  }
}

TEST_CASE("regular residues are closed under multiplication") {
  for (u64 n = 2; n <= 100; ++n) {
    auto reg = enumerate_regular(n);
    std::vector<bool> is_reg(n + 1, false);
    for (u64 a : reg) is_reg[a] = true;
    for (u64 a : reg)
      for (u64 b : reg) {
        u64 c = mul_mod(a % n, b % n, n);
        if (c == 0) c = n;
        CHECK(is_reg[c]);
      }
  }
}

TEST_CASE("structural facts about rho") {
  ArithmeticTable t = sieve_table(5000);
  auto rho_col = t.rho_column();
  auto phi_col = t.phi_column();
  for (u64 n = 2; n <= 5000; ++n) {
    CHECK(phi_col[n] < rho_col[n]);
    CHECK(rho_col[n] <= n);
    CHECK(static_cast<u128>(rho_col[n]) * rho_col[n] >= static_cast<u128>(n));
    CHECK((rho_col[n] % 2 == 0) == (n % 4 == 2));
    bool squarefree = aux_functions(n).mobius != 0;
    CHECK((rho_col[n] == n) == squarefree);
  }
}

TEST_CASE("self-check suites pass on clean data") {
  CHECK(check_equivalence_suite(120).ok());
  CHECK(check_rho_consistency(1500).ok());
  CHECK(check_sum_suite(1500).ok());
  ArithmeticTable t = sieve_table(20000);
  CHECK(check_table_properties(t).ok());
  CHECK(check_table_pointwise(sieve_table(3000)).ok());
}

TEST_CASE("the audits catch a corrupted table entry") {
  const u64 n_max = 500, target = 300;
  ArithmeticTable clean = sieve_table(n_max);
  std::vector<u32> spf(clean.spf_column().begin(), clean.spf_column().end());
  std::vector<u32> phi(clean.phi_column().begin(), clean.phi_column().end());
  std::vector<u32> rho_c(clean.rho_column().begin(), clean.rho_column().end());

  SUBCASE("rho corruption") {
    rho_c[target] += 1;
    auto bad = ArithmeticTable::from_columns(n_max, spf, phi, rho_c);
    SuiteReport rep = check_table_pointwise(bad);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.first_failure == target);
  }
  SUBCASE("phi corruption") {
    phi[target] -= 1;
    auto bad = ArithmeticTable::from_columns(n_max, spf, phi, rho_c);
    SuiteReport rep = check_table_pointwise(bad);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.first_failure == target);
  }
}
