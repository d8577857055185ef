#include "regmod/regular.hpp"

#include <numeric>

namespace regmod {

namespace {

void require_modulus(u64 n) {
  if (n < 2 || n > kMaxPointwiseN) throw std::domain_error("modulus must be in [2, 2^63 - 1]");
}

// Reduce a into the representative set [1, n]; n stands for the zero class.
u64 reduce(u64 a, u64 n) {
  u64 r = a % n;
  return r == 0 ? n : r;
}

std::optional<u64> definition_witness(u64 a, u64 n) {
  u64 a2 = mul_mod(a, a, n);
  u64 target = a % n;
  for (u64 x = 0; x < n; ++x) {
    if (mul_mod(a2, x, n) == target) return x;
  }
  return std::nullopt;
}

bool prime_condition(u64 a, const PrimeFactorization& fn) {
  for (const auto& pp : fn.factors) {
    if (a % pp.prime != 0) continue;
    if (a % pp.value() != 0) return false;
  }
  return true;
}

}  // namespace

const char* to_string(RegularityMethod m) {
  switch (m) {
    case RegularityMethod::kDefinition: return "definition";
    case RegularityMethod::kPrimeCondition: return "prime-condition";
    case RegularityMethod::kGcdSquare: return "gcd-square";
    case RegularityMethod::kUnitaryGcd: return "unitary-gcd";
    case RegularityMethod::kEulerPower: return "euler-power";
    case RegularityMethod::kWeakOrder: return "weak-order";
  }
  return "?";
}

bool is_regular(u64 a, u64 n, RegularityMethod method) {
  require_modulus(n);
  a = reduce(a, n);
  switch (method) {
    case RegularityMethod::kDefinition:
      return definition_witness(a, n).has_value();
    case RegularityMethod::kPrimeCondition:
      return prime_condition(a, factor(n));
    case RegularityMethod::kGcdSquare:
      return std::gcd(a, n) == std::gcd(mul_mod(a, a, n), n);
    case RegularityMethod::kUnitaryGcd: {
      u64 d = std::gcd(a, n);
      return std::gcd(d, n / d) == 1;
    }
    case RegularityMethod::kEulerPower: {
      u64 r = a % n;
      return pow_mod(r, euler_phi(n) + 1, n) == r;
    }
    case RegularityMethod::kWeakOrder:
      return weak_order(a, n).has_value();
  }
  throw std::logic_error("unknown method");
}

RegularityVerdict check_regular(u64 a, u64 n) {
  require_modulus(n);
  RegularityVerdict v;
  v.n = n;
  v.a = reduce(a, n);
  std::array<bool, 6> results{};
  for (std::size_t i = 0; i < kAllRegularityMethods.size(); ++i)
    results[i] = is_regular(v.a, n, kAllRegularityMethods[i]);
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i] != results[0])
      throw std::logic_error(std::string("regularity methods disagree at a=") +
                             std::to_string(v.a) + " n=" + std::to_string(n) + " (" +
                             to_string(kAllRegularityMethods[i]) + ")");
  }
  v.regular = results[0];
  if (v.regular) {
    v.witness_x = definition_witness(v.a, n);
    v.weak_order_k = weak_order(v.a, n);
  }
  return v;
}

u64 rho(const PrimeFactorization& f) {
  u64 r = 1;
  for (const auto& pp : f.factors) {
    u64 q = pp.value();
    r *= q - q / pp.prime + 1;  // phi(p^v) + 1
  }
  return r;
}

u64 rho(u64 n) {
  if (n < 1 || n > kMaxPointwiseN) throw std::domain_error("rho: n must be in [1, 2^63 - 1]");
  return rho(factor(n));
}

u64 rho_via_unitary_sum(u64 n) {
  PrimeFactorization f = factor(n);
  u64 s = 0;
  for (u64 d : unitary_divisors(f)) s += euler_phi(d);
  return s;
}

std::vector<u64> enumerate_regular(u64 n) {
  if (n == 1) return {1};
  require_modulus(n);
  std::vector<u64> reg;
  reg.reserve(64);
  for (u64 a = 1; a <= n; ++a) {
    u64 d = std::gcd(a, n);
    if (std::gcd(d, n / d) == 1) reg.push_back(a);
  }
  return reg;
}

u64 regular_sum(u64 n) {
  u128 s = u128(n) * (rho(n) + 1) / 2;
  if (s > u128(~u64(0))) throw std::overflow_error("regular_sum exceeds 64 bits");
  return static_cast<u64>(s);
}

std::optional<u64> weak_order(u64 a, u64 n) {
  require_modulus(n);
  u64 b = a % n;
  u64 cap = euler_phi(n);
  u64 cur = b;
  for (u64 k = 1; k <= cap; ++k) {
    cur = mul_mod(cur, b, n);  // cur = b^(k+1)
    if (cur == b) return k;
  }
  return std::nullopt;
}

u64 sum_coprime(u64 n) {
  if (n == 1) throw std::domain_error("sum_coprime undefined at n = 1");
  require_modulus(n);
  u128 s = u128(n) * euler_phi(n) / 2;
  if (s > u128(~u64(0))) throw std::overflow_error("sum_coprime exceeds 64 bits");
  return static_cast<u64>(s);
}

SuiteReport check_equivalence_suite(u64 n_max) {
  SuiteReport r;
  for (u64 n = 2; n <= n_max; ++n) {
    for (u64 a = 1; a <= n; ++a) {
      try {
        check_regular(a, n);
      } catch (const std::logic_error& e) {
        r.first_failure = n;
        r.detail = e.what();
        return r;
      }
      ++r.checked;
    }
  }
  return r;
}

SuiteReport check_rho_consistency(u64 n_max) {
  SuiteReport r;
  for (u64 n = 1; n <= n_max; ++n) {
    u64 a = rho(n);
    u64 b = rho_via_unitary_sum(n);
    u64 c = enumerate_regular(n).size();
    if (a != b || a != c) {
      r.first_failure = n;
      r.detail = "rho routes disagree: product=" + std::to_string(a) +
                 " unitary-sum=" + std::to_string(b) + " enumeration=" + std::to_string(c);
      return r;
    }
    ++r.checked;
  }
  return r;
}

SuiteReport check_sum_suite(u64 n_max) {
  SuiteReport r;
  for (u64 n = 1; n <= n_max; ++n) {
    const auto reg = enumerate_regular(n);
    u64 s = 0;
    for (u64 a : reg) s += a;
    if (s != regular_sum(n)) {
      r.first_failure = n;
      r.detail = "regular_sum formula " + std::to_string(regular_sum(n)) +
                 " != enumerated " + std::to_string(s);
      return r;
    }
    ++r.checked;
  }
  return r;
}

SuiteReport check_table_properties(const ArithmeticTable& t) {
  SuiteReport r;
  auto spf = t.spf_column();
  auto phi = t.phi_column();
  auto rho = t.rho_column();
  auto fail = [&](u64 n, std::string why) {
    r.first_failure = n;
    r.detail = std::move(why);
  };
  for (u64 n = 2; n <= t.max_n(); ++n) {
    u64 ph = phi[n], rh = rho[n];
    if (!(ph < rh && rh <= n)) {
      fail(n, "phi < rho <= n violated");
      return r;
    }
    if (u128(rh) * rh < n) {
      fail(n, "rho(n)^2 >= n violated");
      return r;
    }
    bool even = (rh & 1) == 0;
    if (even != (n % 4 == 2)) {
      fail(n, "parity rule violated (rho even iff n == 2 mod 4)");
      return r;
    }
    // Squarefree detection by walking spf; independent of the rho column.
    bool squarefree = true;
    for (u64 m = n; m > 1;) {
      u64 p = spf[m];
      m /= p;
      if (m % p == 0) {
        squarefree = false;
        break;
      }
    }
    if (squarefree != (rh == n)) {
      fail(n, "rho(n) = n must hold exactly for squarefree n");
      return r;
    }
    ++r.checked;
  }
  return r;
}

SuiteReport check_table_pointwise(const ArithmeticTable& t) {
  SuiteReport r;
  for (u64 n = 1; n <= t.max_n(); ++n) {
    PrimeFactorization f = factor(n);
    u64 sp = n == 1 ? 1 : f.factors.front().prime;
    if (t.spf(n) != sp || t.phi(n) != euler_phi(f) || t.rho(n) != rho(f)) {
      r.first_failure = n;
      r.detail = "table row diverges from pointwise evaluation";
      return r;
    }
    ++r.checked;
  }
  return r;
}

}  // namespace regmod
