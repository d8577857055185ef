#pragma once

// Extreme behaviour of rho(n)/n and its reciprocal along explicit integer
// sequences, plus the small exact extremal facts (squarefree maximizers,
// prime-power minimizers).
//
// Both sequences are indexed by a prime bound y and are evaluated entirely
// in log space: the underlying integers n(y) overflow u64 long before the
// ratios get interesting, so no routine here ever materializes n.

#include <span>
#include <vector>

#include "regmod/core_arith.hpp"

namespace regmod {

// One evaluation point of an extremal sequence.
//   log_n     natural log of the constructed integer
//   ratio     the normalized quantity whose limit is `limit`
//   deviation |ratio / limit - 1|
struct ExtremalSample {
  u64 y = 0;
  double log_n = 0;
  double ratio = 0;
  double limit = 0;
  double deviation = 0;
};

// Minimizing sequence: n(y) = prod_{p <= y} p^{e_p(y)} with
// e_p(y) = max(2, floor(log_p y)), so every prime gets exponent >= 2 and
// small primes get deep towers. Reported ratio is
// (rho(n)/n) * log log n, which tends to e^{-gamma} from above.
std::vector<ExtremalSample> minimal_order_sequence(std::span<const u64> y_values);

// Maximizing sequence: n(y) = prod_{p <= y} p (squarefree, so rho(n) = n).
// Reported ratio is (n/phi(n)) / log log n, which tends to e^{gamma}.
std::vector<ExtremalSample> maximal_order_sequence(std::span<const u64> y_values);

// Exact small-range extremal facts, checked for every n <= n_max:
//   - rho(n) = n exactly for squarefree n, rho(n) < n otherwise;
//   - among 2 <= n <= n_max, rho(n)/phi(n) attains its strict minimum at
//     the largest prime <= n_max;
//   - rho(2^k)/2^k strictly decreases in k.
// Returns the first n violating any of these, or 0 if all hold.
u64 trivial_extremes_check(u64 n_max);

// For every prime p <= p_max, verifies the exact inequality chain behind
// the exponent >= 2 choice in the minimizing sequence, evaluated at nu = 3:
//   p^3 / rho(p^3) >= 1 + (p^2 - 1)/(p^3 - p^2 + 1)   (equality, in fact)
//   1 + (p^2 - 1)/(p^3 - p^2 + 1) > 1 + 1/p            (strict)
// All comparisons are exact integer cross-multiplications.
// Returns the first failing prime, or 0 if all hold.
u64 cube_ratio_check(u64 p_max);

// Euler-Mascheroni constant and its exponentials, packaged the same way as
// the average-order constants so the CLI can emit one uniform table.
struct GammaConstants {
  double gamma = 0;
  double e_gamma = 0;
  double e_neg_gamma = 0;
};
GammaConstants gamma_constants();

}  // namespace regmod
