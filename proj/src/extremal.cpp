#include "regmod/extremal.hpp"

#include <cmath>
#include <stdexcept>

#include "regmod/kahan.hpp"
#include "regmod/regular.hpp"

namespace regmod {

namespace {

// Largest exponent e with p^e <= y, by repeated multiplication. y fits in
// u64 so the loop runs at most 63 times.
u32 floor_log(u64 p, u64 y) {
  u32 e = 0;
  u64 v = 1;
  while (v <= y / p) {
    v *= p;
    ++e;
  }
  return e;
}

}  // namespace

std::vector<ExtremalSample> minimal_order_sequence(std::span<const u64> y_values) {
  std::vector<ExtremalSample> out;
  out.reserve(y_values.size());
  const double limit = std::exp(-kEulerGamma);
  for (u64 y : y_values) {
    if (y < 3) throw std::domain_error("minimal_order_sequence: y must be >= 3");
    // log n = sum e_p log p; log(rho(n)/n) = sum log(1 - 1/p + p^-e_p).
    CompensatedSum<long double> log_n, log_ratio;
    for (u32 pu : primes_up_to(y)) {
      u64 p = pu;
      u32 e = std::max<u32>(2, floor_log(p, y));
      long double pd = static_cast<long double>(p);
      log_n.add(e * std::log(pd));
      log_ratio.add(std::log(1.0L - 1.0L / pd + std::pow(pd, -static_cast<long double>(e))));
    }
    ExtremalSample s;
    s.y = y;
    s.log_n = static_cast<double>(log_n.value());
    s.ratio = static_cast<double>(std::exp(log_ratio.value()) * std::log(log_n.value()));
    s.limit = limit;
    s.deviation = std::fabs(s.ratio / limit - 1.0);
    out.push_back(s);
  }
  return out;
}

std::vector<ExtremalSample> maximal_order_sequence(std::span<const u64> y_values) {
  std::vector<ExtremalSample> out;
  out.reserve(y_values.size());
  const double limit = std::exp(kEulerGamma);
  for (u64 y : y_values) {
    if (y < 3) throw std::domain_error("maximal_order_sequence: y must be >= 3");
    // n is the primorial of y, so rho(n) = n and the extreme quantity is
    // n/phi(n) = prod 1/(1 - 1/p), normalized by log log n = log theta(y).
    CompensatedSum<long double> log_n, log_quot;
    for (u32 pu : primes_up_to(y)) {
      long double pd = static_cast<long double>(pu);
      log_n.add(std::log(pd));
      log_quot.add(-std::log1p(-1.0L / pd));
    }
    ExtremalSample s;
    s.y = y;
    s.log_n = static_cast<double>(log_n.value());
    s.ratio = static_cast<double>(std::exp(log_quot.value()) / std::log(log_n.value()));
    s.limit = limit;
    s.deviation = std::fabs(s.ratio / limit - 1.0);
    out.push_back(s);
  }
  return out;
}

u64 trivial_extremes_check(u64 n_max) {
  if (n_max < 2) throw std::domain_error("trivial_extremes_check: n_max must be >= 2");
  ArithmeticTable t = sieve_table(n_max);
  auto rho_col = t.rho_column();
  auto phi_col = t.phi_column();

  u64 largest_prime = 0;
  u64 best_n = 2;  // argmin of rho(n)/phi(n) so far
  for (u64 n = 2; n <= n_max; ++n) {
    if (t.spf(n) == n) largest_prime = n;
    // Squarefree detection by walking smallest prime factors.
    bool squarefree = true;
    for (u64 m = n; m > 1;) {
      u64 p = t.spf(m);
      m /= p;
      if (m % p == 0) {
        squarefree = false;
        break;
      }
    }
    if (squarefree != (rho_col[n] == n)) return n;
    if (!squarefree && rho_col[n] >= n) return n;
    // rho(n)/phi(n) < rho(b)/phi(b)  <=>  rho(n)*phi(b) < rho(b)*phi(n),
    // compared exactly in 128 bits.
    if (static_cast<u128>(rho_col[n]) * phi_col[best_n] <
        static_cast<u128>(rho_col[best_n]) * phi_col[n])
      best_n = n;
  }
  if (best_n != largest_prime) return best_n;

  // rho(2^k)/2^k = 1 - 1/2 + 1/2^k must strictly decrease with k.
  u64 prev_rho = 2, prev_n = 2;
  for (u64 n = 4; n <= n_max; n *= 2) {
    // rho(n)/n < prev_rho/prev_n, cross-multiplied.
    if (!(static_cast<u128>(rho_col[n]) * prev_n < static_cast<u128>(prev_rho) * n)) return n;
    prev_rho = rho_col[n];
    prev_n = n;
    if (n > n_max / 2) break;
  }
  return 0;
}

u64 cube_ratio_check(u64 p_max) {
  for (u32 pu : primes_up_to(p_max)) {
    u64 p = pu;
    u128 p2 = static_cast<u128>(p) * p;
    u128 p3 = p2 * p;
    u128 rho_p3 = p3 - p2 + 1;
    // p^3 / rho(p^3) >= 1 + (p^2 - 1)/rho(p^3)
    //   <=>  p^3 * rho >= (rho + p^2 - 1) * rho
    //   <=>  p^3 >= rho + p^2 - 1, which holds with equality.
    if (p3 < rho_p3 + p2 - 1) return p;
    // 1 + (p^2 - 1)/rho > 1 + 1/p  <=>  p*(p^2 - 1) > rho.
    if (!(static_cast<u128>(p) * (p2 - 1) > rho_p3)) return p;
  }
  return 0;
}

GammaConstants gamma_constants() {
  GammaConstants g;
  g.gamma = kEulerGamma;
  g.e_gamma = std::exp(kEulerGamma);
  g.e_neg_gamma = std::exp(-kEulerGamma);
  return g;
}

}  // namespace regmod
