#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "regmod/core_arith.hpp"

// A residue a (mod n) is regular when a^2 x == a (mod n) has a solution.
// Six equivalent tests are implemented; each can be run alone, and the
// combined check refuses to answer unless all six agree. Residues are
// represented in [1, n], with a = n standing for the zero class.

namespace regmod {

enum class RegularityMethod {
  kDefinition,      // search x in [0, n) with a^2 x == a; O(n), the ground truth
  kPrimeCondition,  // for every p^v || n: p does not divide a, or p^v divides a
  kGcdSquare,       // gcd(a, n) == gcd(a^2, n)
  kUnitaryGcd,      // d = gcd(a, n) satisfies gcd(d, n/d) == 1
  kEulerPower,      // a^(phi(n)+1) == a (mod n)
  kWeakOrder,       // some k in [1, phi(n)] has a^(k+1) == a (mod n)
};

inline constexpr std::array<RegularityMethod, 6> kAllRegularityMethods = {
    RegularityMethod::kDefinition,   RegularityMethod::kPrimeCondition,
    RegularityMethod::kGcdSquare,    RegularityMethod::kUnitaryGcd,
    RegularityMethod::kEulerPower,   RegularityMethod::kWeakOrder,
};

const char* to_string(RegularityMethod m);

// n >= 2; a is reduced mod n into [1, n] first.
bool is_regular(u64 a, u64 n, RegularityMethod method);

struct RegularityVerdict {
  u64 a = 0;  // reduced representative in [1, n]
  u64 n = 0;
  bool regular = false;
  std::optional<u64> witness_x;      // from the definitional search, if regular
  std::optional<u64> weak_order_k;   // smallest k with a^(k+1) == a, if regular
};

// Runs all six methods; throws std::logic_error if they ever disagree.
RegularityVerdict check_regular(u64 a, u64 n);

// rho(n) = #Reg_n, multiplicative, via the factorization.
u64 rho(u64 n);
u64 rho(const PrimeFactorization& f);

// Same value along the independent route rho(n) = sum of phi(d) over unitary d | n.
u64 rho_via_unitary_sum(u64 n);

// Reg_n as a sorted list in [1, n]; enumerate_regular(1) = {1}.
std::vector<u64> enumerate_regular(u64 n);

// S(n) = sum of Reg_n = n (rho(n) + 1) / 2. Throws std::overflow_error when
// the value exceeds 64 bits (n around 6e9 and squarefree).
u64 regular_sum(u64 n);

// Smallest k >= 1 with a^(k+1) == a (mod n), or nullopt after the search caps
// at phi(n) (exactly the non-regular case).
std::optional<u64> weak_order(u64 a, u64 n);

// Sum of the a in [1, n] coprime to n: n phi(n) / 2. Undefined at n = 1
// (the pairing a <-> n - a degenerates); throws std::domain_error there.
u64 sum_coprime(u64 n);

// ---- verification suites (used by tests and the CLI verify command) ----

struct SuiteReport {
  u64 checked = 0;
  std::optional<u64> first_failure;
  std::string detail;
  bool ok() const { return !first_failure.has_value(); }
};

// All six methods agree for every a in [1, n], n in [2, n_max].
SuiteReport check_equivalence_suite(u64 n_max);

// rho(n) == rho_via_unitary_sum(n) == |enumerate_regular(n)| for n <= n_max.
SuiteReport check_rho_consistency(u64 n_max);

// regular_sum(n) equals the enumerated sum for n <= n_max.
SuiteReport check_sum_suite(u64 n_max);

// Structural facts over a sieve table: phi(n) < rho(n) <= n for n > 1;
// rho(n) = n exactly for squarefree n; rho(n) even iff n == 2 (mod 4);
// rho(n)^2 >= n.
SuiteReport check_table_properties(const ArithmeticTable& t);

// Every table row equals the pointwise route (factor + phi + rho). Used with
// small tables and by the fault-injection self-test.
SuiteReport check_table_pointwise(const ArithmeticTable& t);

}  // namespace regmod
