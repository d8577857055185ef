#include "regmod/core_arith.hpp"

#include <algorithm>
#include <numeric>

namespace regmod {

namespace {

void require_pointwise(u64 n) {
  if (n < 1 || n > kMaxPointwiseN) throw std::domain_error("n must be in [1, 2^63 - 1]");
}

constexpr u64 kTrialLimit = 1'000'000;

}  // namespace

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // This witness set is deterministic below 3.3e24, so covers all of u64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 PrimePower::value() const {
  u64 v = 1;
  for (u32 i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::span<const u32> small_primes() {
  static const std::vector<u32> primes = [] {
    std::vector<u32> ps = primes_up_to(kTrialLimit);
    return ps;
  }();
  return primes;
}

std::vector<u32> primes_up_to(u64 limit) {
  if (limit > kMaxSieveN) throw std::domain_error("primes_up_to: limit exceeds 1e8");
  std::vector<bool> comp(limit + 1, false);
  std::vector<u32> ps;
  for (u64 i = 2; i <= limit; ++i) {
    if (!comp[i]) {
      ps.push_back(static_cast<u32>(i));
      for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
  }
  return ps;
}

namespace {

// Brent's cycle variant of Pollard rho; n must be odd, composite, not a
// prime power of a trial prime.
u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int lam = 1;
    auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = step(y);
      int k = 0;
      while (k < lam && d == 1) {
        u64 ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        k += lim;
        if (d == n) {
          // Batch overshoot: redo this block one step at a time.
          d = 1;
          y = ys;
          do {
            y = step(y);
            d = std::gcd(x > y ? x - y : y - x, n);
          } while (d == 1);
          break;
        }
      }
      lam *= 2;
    }
    if (d != n) return d;
    ++c;  // rare: cycle collapsed, retry with a new increment
  }
}

void factor_big(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_big(d, out);
  factor_big(n / d, out);
}

}  // namespace

PrimeFactorization factor(u64 n) {
  require_pointwise(n);
  PrimeFactorization f;
  f.n = n;
  u64 m = n;
  for (u32 p : small_primes()) {
    if (u64(p) * p > m) break;
    if (m % p == 0) {
      u32 e = 0;
      while (m % p == 0) m /= p, ++e;
      f.factors.push_back({p, e});
    }
  }
  if (m > 1) {
    // No prime below 1e6 divides m, so m <= 1e12 is necessarily prime.
    if (m <= kTrialLimit * kTrialLimit || is_prime(m)) {
      f.factors.push_back({m, 1});
    } else {
      std::vector<u64> big;
      factor_big(m, big);
      std::sort(big.begin(), big.end());
      for (std::size_t i = 0; i < big.size();) {
        std::size_t j = i;
        while (j < big.size() && big[j] == big[i]) ++j;
        f.factors.push_back({big[i], static_cast<u32>(j - i)});
        i = j;
      }
    }
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return f;
}

u64 euler_phi(const PrimeFactorization& f) {
  u64 r = 1;
  for (const auto& pp : f.factors) r *= pp.value() - pp.value() / pp.prime;
  return r;
}

u64 euler_phi(u64 n) { return euler_phi(factor(n)); }

std::vector<u64> unitary_divisors(const PrimeFactorization& f) {
  std::vector<u64> divs{1};
  for (const auto& pp : f.factors) {
    u64 q = pp.value();
    std::size_t sz = divs.size();
    for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * q);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<u64> unitary_divisors(u64 n) { return unitary_divisors(factor(n)); }

std::vector<u64> divisors(const PrimeFactorization& f) {
  std::vector<u64> divs{1};
  for (const auto& pp : f.factors) {
    std::size_t sz = divs.size();
    u64 q = 1;
    for (u32 e = 1; e <= pp.exponent; ++e) {
      q *= pp.prime;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * q);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

AuxValues aux_functions(u64 n) {
  PrimeFactorization f = factor(n);
  AuxValues a;
  a.omega = f.omega();
  a.mobius = 1;
  a.tau = 1;
  u128 sigma = 1;
  for (const auto& pp : f.factors) {
    a.mobius = pp.exponent > 1 ? 0 : -a.mobius;
    a.tau *= pp.exponent + 1;
    u128 geo = 1, pk = 1;
    for (u32 e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      geo += pk;
    }
    sigma *= geo;
    if (sigma > u128(~u64(0))) throw std::overflow_error("sigma(n) exceeds 64 bits");
  }
  a.sigma = static_cast<u64>(sigma);
  return a;
}

ArithmeticTable ArithmeticTable::from_columns(u64 max_n, std::vector<u32> spf,
                                              std::vector<u32> phi, std::vector<u32> rho) {
  if (spf.size() != max_n + 1 || phi.size() != max_n + 1 || rho.size() != max_n + 1)
    throw std::invalid_argument("from_columns: column size must be max_n + 1");
  ArithmeticTable t;
  t.max_n_ = max_n;
  t.spf_ = std::move(spf);
  t.phi_ = std::move(phi);
  t.rho_ = std::move(rho);
  return t;
}

ArithmeticTable sieve_table(u64 max_n) {
  if (max_n < 1 || max_n > kMaxSieveN) throw std::domain_error("sieve_table: max_n must be in [1, 1e8]");
  ArithmeticTable t;
  t.max_n_ = max_n;
  t.spf_.assign(max_n + 1, 0);
  t.phi_.assign(max_n + 1, 0);
  t.rho_.assign(max_n + 1, 0);
  // pk[n] = spf(n)^v where spf(n)^v || n; transient, freed after the pass.
  std::vector<u32> pk(max_n + 1, 0);
  std::vector<u32> primes;
  auto& spf = t.spf_;
  auto& phi = t.phi_;
  auto& rho = t.rho_;
  spf[1] = 1;
  phi[1] = 1;
  rho[1] = 1;
  for (u64 i = 2; i <= max_n; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<u32>(i);
      pk[i] = static_cast<u32>(i);
      phi[i] = static_cast<u32>(i - 1);
      rho[i] = static_cast<u32>(i);  // phi(p) + 1
      primes.push_back(static_cast<u32>(i));
    }
    for (u32 p : primes) {
      if (p > spf[i]) break;
      u64 ip = i * p;
      if (ip > max_n) break;
      spf[ip] = p;
      pk[ip] = (i % p == 0) ? pk[i] * p : p;
      u64 m = ip / pk[ip];  // coprime cofactor: multiplicativity applies
      u64 phipp = pk[ip] - pk[ip] / p;
      phi[ip] = static_cast<u32>(phi[m] * phipp);
      rho[ip] = static_cast<u32>(rho[m] * (phipp + 1));
    }
  }
  return t;
}

}  // namespace regmod
