#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regmod/core_arith.hpp"

// Mean-value machinery for rho. The partial sums
//
//   sum_{n<=x} rho(n)         = (A/2) x^2 + O(x log x)
//   sum_{n<=x} rho(n)/phi(n)  = B x + O(log^2 x),  B = pi^2/6
//   sum_{n<=x} phi(n)/rho(n)  = C x + O(log^(5/3) x (loglog x)^(4/3))
//   sum_{n<=x} 1/rho(n)       = D log x + E + O(log^9 x / x)
//
// are swept exactly (rho integer-exact, quotients compensated); the constants
// come from Euler products over primes up to a cutoff, with tail estimates.
// The exact-rational layer (f = phi/rho, its multiplicative companions v and
// h) backs the divisor-convolution identities underlying B, C and D.

namespace regmod {

using Rational = boost::multiprecision::cpp_rational;

// ---- exact rational layer ----

// f(p^v) = phi(p^v)/rho(p^v); f(p^0) = 1.
Rational f_at_prime_power(u64 p, u32 nu);

// v is multiplicative, defined by f(n) = sum_{d|n} (phi(d)/d) v(n/d):
//   v(p^v) = f(p^v) - (1 - 1/p) [ f(p^(v-1)) + f(p^(v-2))/p + ... + 1/p^(v-1) ].
// v(p) = 0 for every prime; v(4) = 1/6.
Rational v_at_prime_power(u64 p, u32 nu);

// h is multiplicative with 1/rho(p^v) = h(p^v) + 1/phi(p^v):
//   h(p^v) = -1 / (phi(p^v) (phi(p^v) + 1)).
Rational h_at_prime_power(u64 p, u32 nu);

Rational v_of(const PrimeFactorization& f);
Rational h_of(const PrimeFactorization& f);

struct IdentityReport {
  u64 checked = 0;
  std::optional<u64> first_failure;
  int failed_identity = 0;  // 1, 2 or 3 when first_failure is set
  bool ok() const { return !first_failure.has_value(); }
};

// Exact-rational verification, for every n <= n_max, of
//   (1) rho(n)/phi(n) = sum over unitary d | n of 1/phi(d)
//   (2) phi(n)/rho(n) = sum over d | n of (phi(d)/d) v(n/d)
//   (3) 1/rho(n)      = sum over unitary d | n of h(d)/phi(n/d)
IdentityReport verify_identities(u64 n_max);

// ---- partial sums ----

struct PartialSumRow {
  u64 x = 0;
  u64 sum_rho = 0;             // exact
  double sum_rho_over_phi = 0;
  double sum_phi_over_rho = 0;
  double sum_recip_rho = 0;
  // Error columns are NaN until apply_error_terms fills them.
  double err_rho = 0, err_b = 0, err_c = 0, err_d = 0;
};

struct SweepConstants {
  double a = 0, b = 0, c = 0, d = 0, e = 0;
};

// Default checkpoint ladder: {1000 * 2^k} union {10^j} union {max_x},
// clipped to [1, max_x], ascending.
std::vector<u64> checkpoint_schedule(u64 max_x);

// One pass over the table; checkpoints must be ascending, unique, within
// [1, max_n]. Quotient columns use compensated summation.
std::vector<PartialSumRow> partial_sums(const ArithmeticTable& t,
                                        std::span<const u64> checkpoints);

// err_rho = sum_rho - (A/2) x^2, err_b = sum_rho_over_phi - B x,
// err_c = sum_phi_over_rho - C x, err_d = sum_recip_rho - (D log x + E).
void apply_error_terms(std::span<PartialSumRow> rows, const SweepConstants& k);

// ---- constants ----

struct ConstantEstimate {
  std::string name;
  double value = 0;
  double lower = 0;  // lower <= value <= upper always
  double upper = 0;
  u64 prime_cutoff = 0;
  std::string method;
};

// zeta(3) by direct series with an Euler-Maclaurin tail; absolute error
// below 1e-12.
double zeta3();

// A = prod_p (1 - 1/(p^2 (p+1))), also reachable as
// zeta(2) * prod_p (1 - 1/p^2 - 1/p^3 + 1/p^4) with the zeta(2) Euler
// product truncated at the same cutoff (the two agree factor by factor).
struct ConstantAForms {
  double product_form = 0;
  double zeta_form = 0;
};
ConstantAForms constant_A_forms(u64 prime_cutoff);
ConstantEstimate constant_A(u64 prime_cutoff);

// B = pi^2/6, closed form.
ConstantEstimate constant_B();

// C = prod_p (1 - 1/p)(1 + (1 - 1/p) sum_{v>=1} 1/(p^v - p^(v-1) + 1)).
// Rigorous bracket: the series tail past depth k equals 1/(p^k r_p) with
// p - 1 < r_p < p, so substituting r_p = p / p - 1 gives per-prime bounds;
// omitted primes multiply by a factor in (1 - 2/P, 1).
ConstantEstimate constant_C(u64 prime_cutoff, int series_depth);

// D = K prod_p (1 - p(p-1)/(p^2-p+1) sum_{v>=1} 1/(p^v (p^v - p^(v-1) + 1))),
// K = zeta(2) zeta(3) / zeta(6). Heuristic tail bracket.
ConstantEstimate constant_D(u64 prime_cutoff, int nu_max);

ConstantEstimate constant_K();

// ---- fits against the sweep ----

struct InterceptFit {
  double value = 0;
  double spread = 0;  // max - min residual over the rows used
  int rows_used = 0;
};

// Least-squares intercept of (sum_recip_rho - D log x) over the given rows
// (a constant model, so the mean residual). Needs at least 3 rows.
InterceptFit estimate_E(std::span<const PartialSumRow> rows, double d_slope);

struct LineFit {
  double slope = 0;
  double intercept = 0;
  int rows_used = 0;
};

// Two-parameter least squares of sum_recip_rho against log x.
LineFit fit_recip_rho_line(std::span<const PartialSumRow> rows);

// ---- coefficient functions of the 1/rho expansion ----

struct AbPsi {
  double a = 0;   // prod_{p|k} (1 - p/(p^2-p+1)); a(k) <= phi(k)/k
  double b = 0;   // sum_{p|k} log p/(p-1) - sum_{p not | k} log p/(p^2-p+1)
  u64 psi = 0;    // k prod_{p|k} (1 + 1/p), exact integer
};

// b's complementary prime sum truncates at prime_cutoff and adds the 1/P
// integral tail estimate.
AbPsi a_b_psi_of_k(u64 k, u64 prime_cutoff);

struct ESeriesResult {
  double d_value = 0;  // K sum h(n) a(n), cross-checks constant_D
  double e_value = 0;  // gamma D + K sum h(n) a(n) (b(n) - log n)
};

// Slowly converging series route to E; cross-check only, the regression
// estimate is the primary one.
ESeriesResult estimate_E_series(u64 n_trunc, u64 prime_cutoff);

}  // namespace regmod
