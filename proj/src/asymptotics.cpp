#include "regmod/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "regmod/kahan.hpp"
#include "regmod/regular.hpp"

namespace regmod {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

u64 pow_u64(u64 p, u32 e) {
  u64 v = 1;
  while (e--) v *= p;
  return v;
}

u64 phi_pp(u64 p, u32 e) {  // phi(p^e), e >= 1
  u64 q = pow_u64(p, e);
  return q - q / p;
}

}  // namespace

// ---------------- exact rational layer ----------------

Rational f_at_prime_power(u64 p, u32 nu) {
  if (nu == 0) return 1;
  u64 ph = phi_pp(p, nu);
  return Rational(ph, ph + 1);  // rho(p^nu) = phi(p^nu) + 1
}

Rational v_at_prime_power(u64 p, u32 nu) {
  if (nu == 0) return 1;
  // f(p^nu) - (1 - 1/p) * sum_{j=0}^{nu-1} p^(-j) f(p^(nu-1-j))
  Rational inner = 0;
  Rational pj = 1;
  for (u32 j = 0; j < nu; ++j) {
    inner += pj * f_at_prime_power(p, nu - 1 - j);
    pj /= p;
  }
  return f_at_prime_power(p, nu) - (Rational(p - 1, p)) * inner;
}

Rational h_at_prime_power(u64 p, u32 nu) {
  if (nu == 0) return 1;
  u64 ph = phi_pp(p, nu);
  // phi * (phi + 1) stays within cpp_rational's arbitrary precision even
  // when it would overflow u64.
  return Rational(-1) / (Rational(ph) * Rational(ph + 1));
}

Rational v_of(const PrimeFactorization& f) {
  Rational r = 1;
  for (const auto& pp : f.factors) r *= v_at_prime_power(pp.prime, pp.exponent);
  return r;
}

Rational h_of(const PrimeFactorization& f) {
  Rational r = 1;
  for (const auto& pp : f.factors) r *= h_at_prime_power(pp.prime, pp.exponent);
  return r;
}

IdentityReport verify_identities(u64 n_max) {
  IdentityReport rep;
  for (u64 n = 1; n <= n_max; ++n) {
    PrimeFactorization f = factor(n);
    const u64 rho_n = rho(f);
    const u64 phi_n = euler_phi(f);
    auto fail = [&](int which) {
      rep.first_failure = n;
      rep.failed_identity = which;
    };

    // (1) rho/phi as a unitary-divisor sum of 1/phi(d).
    {
      Rational s = 0;
      for (u64 d : unitary_divisors(f)) s += Rational(1, euler_phi(d));
      if (s != Rational(rho_n, phi_n)) {
        fail(1);
        return rep;
      }
    }

    // (2) phi/rho as the divisor convolution (phi(d)/d) * v(n/d).
    {
      const auto& fs = f.factors;
      const std::size_t w = fs.size();
      // Per-prime tables indexed by exponent.
      std::vector<std::vector<Rational>> vpp(w), phi_over(w);
      for (std::size_t i = 0; i < w; ++i) {
        vpp[i].resize(fs[i].exponent + 1);
        phi_over[i].resize(fs[i].exponent + 1);
        for (u32 e = 0; e <= fs[i].exponent; ++e) {
          vpp[i][e] = v_at_prime_power(fs[i].prime, e);
          phi_over[i][e] = e == 0 ? Rational(1)
                                  : Rational(phi_pp(fs[i].prime, e), pow_u64(fs[i].prime, e));
        }
      }
      Rational s = 0;
      std::vector<u32> e(w, 0);
      while (true) {
        Rational term = 1;
        for (std::size_t i = 0; i < w; ++i)
          term *= phi_over[i][e[i]] * vpp[i][fs[i].exponent - e[i]];
        s += term;
        std::size_t i = 0;
        while (i < w && e[i] == fs[i].exponent) e[i++] = 0;
        if (i == w) break;
        ++e[i];
      }
      if (s != Rational(phi_n, rho_n)) {
        fail(2);
        return rep;
      }
    }

    // (3) 1/rho as the unitary convolution h(d)/phi(n/d).
    {
      Rational s = 0;
      for (u64 d : unitary_divisors(f)) s += h_of(factor(d)) * Rational(1, euler_phi(n / d));
      if (s != Rational(1, rho_n)) {
        fail(3);
        return rep;
      }
    }
    ++rep.checked;
  }
  return rep;
}

// ---------------- partial sums ----------------

std::vector<u64> checkpoint_schedule(u64 max_x) {
  if (max_x < 1) throw std::domain_error("checkpoint_schedule: max_x must be >= 1");
  std::vector<u64> cps;
  for (u64 c = 1000; c <= max_x; c *= 2) cps.push_back(c);
  for (u64 c = 1; c <= max_x; c *= 10) {
    cps.push_back(c);
    if (c > max_x / 10) break;
  }
  cps.push_back(max_x);
  std::sort(cps.begin(), cps.end());
  cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
  return cps;
}

std::vector<PartialSumRow> partial_sums(const ArithmeticTable& t,
                                        std::span<const u64> checkpoints) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || checkpoints[i] > t.max_n() ||
        (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
      throw std::domain_error("partial_sums: checkpoints must be ascending within [1, max_n]");
  }
  auto phi = t.phi_column();
  auto rho = t.rho_column();
  std::vector<PartialSumRow> rows;
  rows.reserve(checkpoints.size());
  u64 sum_rho = 0;
  CompensatedSum<long double> s_rp, s_pr, s_ir;
  std::size_t next = 0;
  for (u64 n = 1; n <= t.max_n() && next < checkpoints.size(); ++n) {
    sum_rho += rho[n];
    s_rp.add(static_cast<long double>(rho[n]) / phi[n]);
    s_pr.add(static_cast<long double>(phi[n]) / rho[n]);
    s_ir.add(1.0L / rho[n]);
    if (n == checkpoints[next]) {
      PartialSumRow row;
      row.x = n;
      row.sum_rho = sum_rho;
      row.sum_rho_over_phi = static_cast<double>(s_rp.value());
      row.sum_phi_over_rho = static_cast<double>(s_pr.value());
      row.sum_recip_rho = static_cast<double>(s_ir.value());
      row.err_rho = row.err_b = row.err_c = row.err_d = std::nan("");
      rows.push_back(row);
      ++next;
    }
  }
  return rows;
}

void apply_error_terms(std::span<PartialSumRow> rows, const SweepConstants& k) {
  for (auto& r : rows) {
    double x = static_cast<double>(r.x);
    r.err_rho = static_cast<double>(r.sum_rho) - 0.5 * k.a * x * x;
    r.err_b = r.sum_rho_over_phi - k.b * x;
    r.err_c = r.sum_phi_over_rho - k.c * x;
    r.err_d = r.sum_recip_rho - (k.d * std::log(x) + k.e);
  }
}

// ---------------- constants ----------------

double zeta3() {
  // sum_{n<=N} n^-3, summed downward, plus the Euler-Maclaurin tail
  // 1/(2N^2) - 1/(2N^3) + 1/(4N^4); remainder O(N^-6) ~ 1e-26 at N = 2e4.
  constexpr long double N = 20000.0L;
  long double s = 0;
  for (long double n = N; n >= 1; n -= 1) s += 1.0L / (n * n * n);
  s += 0.5L / (N * N) - 0.5L / (N * N * N) + 0.25L / (N * N * N * N);
  return static_cast<double>(s);
}

ConstantAForms constant_A_forms(u64 prime_cutoff) {
  if (prime_cutoff < 2) throw std::domain_error("constant_A: cutoff must be >= 2");
  CompensatedSum<long double> l1, lz2, lq;
  for (u32 pu : primes_up_to(prime_cutoff)) {
    long double p = pu;
    l1.add(std::log1p(-1.0L / (p * p * (p + 1))));
    long double ip = 1.0L / p;
    lz2.add(-std::log1p(-ip * ip));
    lq.add(std::log1p(-(ip * ip + ip * ip * ip - ip * ip * ip * ip)));
  }
  ConstantAForms f;
  f.product_form = static_cast<double>(std::exp(l1.value()));
  f.zeta_form = static_cast<double>(std::exp(lz2.value() + lq.value()));
  return f;
}

ConstantEstimate constant_A(u64 prime_cutoff) {
  ConstantAForms f = constant_A_forms(prime_cutoff);
  if (std::fabs(f.product_form - f.zeta_form) > 1e-12 * f.product_form)
    throw std::logic_error("constant_A: the two product forms diverged");
  // Partial product decreases to A; omitted factors shrink it by at most
  // exp(-1/P^2), from sum_{p>P} p^-3 < integral_P^inf t^-3 dt = 1/(2P^2).
  long double P = static_cast<long double>(prime_cutoff);
  ConstantEstimate c;
  c.name = "A";
  c.value = f.product_form;
  c.upper = f.product_form;
  c.lower = static_cast<double>(f.product_form * std::exp(-1.0L / (P * P)));
  c.prime_cutoff = prime_cutoff;
  c.method = "euler-product+integral-tail";
  return c;
}

ConstantEstimate constant_B() {
  ConstantEstimate c;
  c.name = "B";
  c.value = static_cast<double>(kPi * kPi / 6.0L);
  c.lower = c.upper = c.value;
  c.prime_cutoff = 0;
  c.method = "closed-form";
  return c;
}

ConstantEstimate constant_C(u64 prime_cutoff, int series_depth) {
  if (prime_cutoff < 2) throw std::domain_error("constant_C: cutoff must be >= 2");
  if (series_depth < 1) throw std::domain_error("constant_C: series depth must be >= 1");
  CompensatedSum<long double> lo_log, hi_log;
  for (u32 pu : primes_up_to(prime_cutoff)) {
    long double p = pu;
    long double s = 0;
    long double pv = p, pvm = 1;
    for (int v = 1; v <= series_depth; ++v) {
      long double term = 1.0L / (pv - pvm + 1);
      s += term;
      pvm = pv;
      pv *= p;
      if (term < 1e-28L) break;  // deeper terms are below bracket resolution
    }
    // Remaining series mass is exactly 1/(pvm * r) with p - 1 < r < p.
    long double rlo = 1.0L / (pvm * p);
    long double rhi = 1.0L / (pvm * (p - 1));
    long double base = 1.0L + (1.0L - 1.0L / p) * s;
    lo_log.add(std::log((1.0L - 1.0L / p) * (base + rlo)));
    hi_log.add(std::log((1.0L - 1.0L / p) * (base + rhi)));
  }
  // Primes beyond the cutoff multiply the product by something in
  // (1 - 2/P, 1): each factor lies in (1 - 2/p^2, 1) and
  // sum_{p>P} 2/p^2 < 2/P.
  long double tail = std::max(0.0L, 1.0L - 2.0L / static_cast<long double>(prime_cutoff));
  ConstantEstimate c;
  c.name = "C";
  c.lower = static_cast<double>(std::exp(lo_log.value()) * tail);
  c.upper = static_cast<double>(std::exp(hi_log.value()));
  c.value = 0.5 * (c.lower + c.upper);
  c.prime_cutoff = prime_cutoff;
  c.method = "bracketed-euler-product";
  return c;
}

ConstantEstimate constant_D(u64 prime_cutoff, int nu_max) {
  if (prime_cutoff < 2) throw std::domain_error("constant_D: cutoff must be >= 2");
  if (nu_max < 1) throw std::domain_error("constant_D: nu_max must be >= 1");
  CompensatedSum<long double> lg;
  for (u32 pu : primes_up_to(prime_cutoff)) {
    long double p = pu;
    long double s = 0;
    long double pv = p, pvm = 1;
    for (int v = 1; v <= nu_max; ++v) {
      long double term = 1.0L / (pv * (pv - pvm + 1));
      s += term;
      pvm = pv;
      pv *= p;
      if (term < 1e-30L * s) break;  // geometric decay, tail below 1e-18
    }
    long double w = (p * (p - 1) / (p * p - p + 1)) * s;
    lg.add(std::log1p(-w));
  }
  long double z3 = zeta3();
  long double K = (kPi * kPi / 6.0L) * z3 / (kPi * kPi * kPi * kPi * kPi * kPi / 945.0L);
  double value = static_cast<double>(K * std::exp(lg.value()));
  ConstantEstimate c;
  c.name = "D";
  c.value = value;
  // Heuristic: omitted per-prime weights are ~1/p^2, so the true product is
  // below the partial one by at most a factor (1 - 2/P).
  c.lower = value * (1.0 - 2.0 / static_cast<double>(prime_cutoff));
  c.upper = value * (1.0 + 1e-10);
  c.prime_cutoff = prime_cutoff;
  c.method = "euler-product+zeta-series";
  return c;
}

ConstantEstimate constant_K() {
  long double z3 = zeta3();
  long double K = (kPi * kPi / 6.0L) * z3 / (kPi * kPi * kPi * kPi * kPi * kPi / 945.0L);
  ConstantEstimate c;
  c.name = "K";
  c.value = static_cast<double>(K);
  c.lower = c.value * (1 - 2e-12);
  c.upper = c.value * (1 + 2e-12);
  c.prime_cutoff = 0;
  c.method = "zeta-series";
  return c;
}

// ---------------- fits ----------------

InterceptFit estimate_E(std::span<const PartialSumRow> rows, double d_slope) {
  if (rows.size() < 3) throw std::domain_error("estimate_E: need at least 3 checkpoints");
  InterceptFit fit;
  double lo = 0, hi = 0;
  CompensatedSum<long double> acc;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double r = rows[i].sum_recip_rho - d_slope * std::log(static_cast<double>(rows[i].x));
    acc.add(r);
    lo = i == 0 ? r : std::min(lo, r);
    hi = i == 0 ? r : std::max(hi, r);
  }
  fit.value = static_cast<double>(acc.value() / rows.size());
  fit.spread = hi - lo;
  fit.rows_used = static_cast<int>(rows.size());
  return fit;
}

LineFit fit_recip_rho_line(std::span<const PartialSumRow> rows) {
  if (rows.size() < 3) throw std::domain_error("fit_recip_rho_line: need at least 3 checkpoints");
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const long double m = static_cast<long double>(rows.size());
  for (const auto& r : rows) {
    long double lx = std::log(static_cast<long double>(r.x));
    sx += lx;
    sy += r.sum_recip_rho;
    sxx += lx * lx;
    sxy += lx * r.sum_recip_rho;
  }
  long double denom = m * sxx - sx * sx;
  LineFit f;
  f.slope = static_cast<double>((m * sxy - sx * sy) / denom);
  f.intercept = static_cast<double>((sy - f.slope * sx) / m);
  f.rows_used = static_cast<int>(rows.size());
  return f;
}

// ---------------- coefficient functions ----------------

namespace {

// sum over primes p <= cutoff of log p / (p^2 - p + 1), plus the 1/P
// integral estimate of the prime tail (integrand ~ 1/t^2 under the usual
// 1/log t density).
long double complementary_prime_sum(u64 cutoff) {
  CompensatedSum<long double> s;
  for (u32 pu : primes_up_to(cutoff)) {
    long double p = pu;
    s.add(std::log(p) / (p * p - p + 1));
  }
  return s.value() + 1.0L / static_cast<long double>(cutoff);
}

}  // namespace

AbPsi a_b_psi_of_k(u64 k, u64 prime_cutoff) {
  if (k < 1) throw std::domain_error("a_b_psi_of_k: k must be >= 1");
  if (prime_cutoff < 2) throw std::domain_error("a_b_psi_of_k: cutoff must be >= 2");
  PrimeFactorization f = factor(k);
  AbPsi out;
  out.a = 1.0;
  long double b = -complementary_prime_sum(prime_cutoff);
  u128 psi = k;
  for (const auto& pp : f.factors) {
    long double p = static_cast<long double>(pp.prime);
    out.a *= static_cast<double>(1.0L - p / (p * p - p + 1));
    b += std::log(p) / (p - 1) + std::log(p) / (p * p - p + 1);
    psi = psi / pp.prime * (pp.prime + 1);
  }
  if (psi > u128(~u64(0))) throw std::overflow_error("psi(k) exceeds 64 bits");
  out.psi = static_cast<u64>(psi);
  out.b = static_cast<double>(b);
  double phi_over_k = static_cast<double>(euler_phi(f)) / static_cast<double>(k);
  if (out.a > phi_over_k * (1 + 1e-12))
    throw std::logic_error("a(k) <= phi(k)/k violated");
  return out;
}

ESeriesResult estimate_E_series(u64 n_trunc, u64 prime_cutoff) {
  if (n_trunc < 1) throw std::domain_error("estimate_E_series: n_trunc must be >= 1");
  const long double S = complementary_prime_sum(prime_cutoff);
  CompensatedSum<long double> sum_ha, sum_habl;
  for (u64 n = 1; n <= n_trunc; ++n) {
    PrimeFactorization f = factor(n);
    long double h = 1, a = 1, b = -S;
    for (const auto& pp : f.factors) {
      long double p = static_cast<long double>(pp.prime);
      long double ph = static_cast<long double>(phi_pp(pp.prime, pp.exponent));
      h *= -1.0L / (ph * (ph + 1));
      a *= 1.0L - p / (p * p - p + 1);
      b += std::log(p) / (p - 1) + std::log(p) / (p * p - p + 1);
    }
    sum_ha.add(h * a);
    sum_habl.add(h * a * (b - std::log(static_cast<long double>(n))));
  }
  long double z3 = zeta3();
  long double K = (kPi * kPi / 6.0L) * z3 / (kPi * kPi * kPi * kPi * kPi * kPi / 945.0L);
  ESeriesResult r;
  r.d_value = static_cast<double>(K * sum_ha.value());
  r.e_value = static_cast<double>(kEulerGamma * K * sum_ha.value() + K * sum_habl.value());
  return r;
}

}  // namespace regmod
