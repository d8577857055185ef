#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

// Exact integer arithmetic shared by every other module: 64-bit factorization,
// Euler phi, unitary divisors, the small auxiliary functions, and a linear
// sieve that tabulates (spf, phi, rho) in one pass.
//
// rho(n) counts the residues a in [1, n] with a^2 x == a (mod n) solvable; it
// is multiplicative with rho(p^v) = p^v - p^(v-1) + 1 = phi(p^v) + 1.

namespace regmod {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Pointwise operations accept n in [1, kMaxPointwiseN]; anything else throws
// std::domain_error. The sieve is separately capped at kMaxSieveN so its
// columns fit in 32 bits.
inline constexpr u64 kMaxPointwiseN = (u64(1) << 63) - 1;
inline constexpr u64 kMaxSieveN = 100'000'000;

// Euler-Mascheroni constant, 20 digits. Fixed here rather than computed: the
// extremal-order limits e^{+-gamma} are derived from it at runtime.
inline constexpr double kEulerGamma = 0.57721566490153286061;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, valid for every n < 2^64.
bool is_prime(u64 n);

struct PrimePower {
  u64 prime = 0;
  u32 exponent = 0;
  u64 value() const;  // prime^exponent
};

struct PrimeFactorization {
  u64 n = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes
  u32 omega() const { return static_cast<u32>(factors.size()); }
};

// Trial division by primes below 1e6, then Pollard rho (Brent) on what
// remains, so any 64-bit n factors quickly.
PrimeFactorization factor(u64 n);

u64 euler_phi(u64 n);
u64 euler_phi(const PrimeFactorization& f);

// Divisors d of n with gcd(d, n/d) = 1, ascending. There are 2^omega(n) of
// them: all subset products of the maximal prime-power parts.
std::vector<u64> unitary_divisors(u64 n);
std::vector<u64> unitary_divisors(const PrimeFactorization& f);

// All divisors of n, ascending (2^omega subsets generalized to exponent
// ranges). Used by the divisor-convolution identities.
std::vector<u64> divisors(const PrimeFactorization& f);

struct AuxValues {
  int mobius = 0;  // 0 if non-squarefree, else (-1)^omega
  u64 tau = 0;     // number of divisors
  u64 sigma = 0;   // sum of divisors
  u32 omega = 0;   // distinct prime count
};

// sigma can exceed 64 bits only for n near 2^63; that case throws
// std::overflow_error rather than wrapping.
AuxValues aux_functions(u64 n);

// Primes below 1e6, built once (thread-safe magic static); the trial-division
// base shared by factor() and the Euler-product constants.
std::span<const u32> small_primes();

// Fresh Eratosthenes run, limit <= kMaxSieveN.
std::vector<u32> primes_up_to(u64 limit);

// Per-n table of smallest prime factor, phi and rho over [1, max_n], built by
// a linear sieve (each composite visited once; no per-n refactorization).
// Columns are u32, 12 bytes/n, so max_n = 1e8 costs ~1.2 GB resident.
// Convention: spf(1) = 1.
class ArithmeticTable {
 public:
  u64 max_n() const { return max_n_; }
  u64 spf(u64 n) const { return col(spf_, n); }
  u64 phi(u64 n) const { return col(phi_, n); }
  u64 rho(u64 n) const { return col(rho_, n); }

  // Raw columns, index n (entry 0 unused). For single-pass sweeps.
  std::span<const u32> spf_column() const { return spf_; }
  std::span<const u32> phi_column() const { return phi_; }
  std::span<const u32> rho_column() const { return rho_; }

  // Assemble a table from externally supplied columns (each of size
  // max_n + 1). Exists for fault-injection self-tests; does not validate
  // the arithmetic content.
  static ArithmeticTable from_columns(u64 max_n, std::vector<u32> spf,
                                      std::vector<u32> phi, std::vector<u32> rho);

  friend ArithmeticTable sieve_table(u64 max_n);

 private:
  ArithmeticTable() = default;
  u64 col(const std::vector<u32>& c, u64 n) const {
    if (n < 1 || n > max_n_) throw std::out_of_range("ArithmeticTable: n out of range");
    return c[n];
  }
  u64 max_n_ = 0;
  std::vector<u32> spf_, phi_, rho_;
};

ArithmeticTable sieve_table(u64 max_n);

}  // namespace regmod
