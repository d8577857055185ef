// Command-line front end. Every data-producing subcommand emits CSV with a
// header row so the output can be piped straight into plotting or diffing
// tools; `verify` emits one status line per suite and uses its exit code to
// report the result.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regmod/asymptotics.hpp"
#include "regmod/core_arith.hpp"
#include "regmod/extremal.hpp"
#include "regmod/regular.hpp"

namespace {

using regmod::u64;

// All floating output goes through one fixed format so runs are
// byte-for-byte reproducible.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// Returns the stream to write to: `path` if nonempty, else stdout.
std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

int run_eval(const std::string& fn, const std::vector<u64>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw std::domain_error("eval " + fn + " takes " + std::to_string(n) + " argument(s)");
  };
  if (fn == "rho") {
    need(1);
    std::cout << regmod::rho(args[0]) << '\n';
  } else if (fn == "phi") {
    need(1);
    std::cout << regmod::euler_phi(args[0]) << '\n';
  } else if (fn == "s") {
    need(1);
    std::cout << regmod::regular_sum(args[0]) << '\n';
  } else if (fn == "weak-order") {
    need(2);
    auto k = regmod::weak_order(args[0], args[1]);
    if (k)
      std::cout << *k << '\n';
    else
      std::cout << "none\n";
  } else if (fn == "unitary-divisors") {
    need(1);
    auto ds = regmod::unitary_divisors(args[0]);
    for (std::size_t i = 0; i < ds.size(); ++i)
      std::cout << ds[i] << (i + 1 < ds.size() ? ',' : '\n');
  }
  return 0;
}

int run_enumerate(u64 n) {
  std::cout << "a\n";
  for (u64 a : regmod::enumerate_regular(n)) std::cout << a << '\n';
  return 0;
}

int run_sieve(u64 n_max, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);
  regmod::ArithmeticTable t = regmod::sieve_table(n_max);
  auto spf = t.spf_column();
  auto phi = t.phi_column();
  auto rho = t.rho_column();
  out << "n,spf,phi,rho\n";
  for (u64 n = 1; n <= n_max; ++n)
    out << n << ',' << spf[n] << ',' << phi[n] << ',' << rho[n] << '\n';
  return 0;
}

int run_sums(u64 max_x, u64 cutoff, int depth, int nu_max, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);

  regmod::ArithmeticTable t = regmod::sieve_table(max_x);
  std::vector<u64> cps = regmod::checkpoint_schedule(max_x);
  std::vector<regmod::PartialSumRow> rows = regmod::partial_sums(t, cps);

  regmod::SweepConstants k;
  k.a = regmod::constant_A(cutoff).value;
  k.b = regmod::constant_B().value;
  k.c = regmod::constant_C(cutoff, depth).value;
  k.d = regmod::constant_D(cutoff, nu_max).value;
  // The additive constant in the log fit comes from the data itself: mean
  // residual over the late checkpoints, where the error term has settled.
  const u64 thr = std::max<u64>(1000, max_x / 32);
  std::vector<regmod::PartialSumRow> late;
  for (const auto& r : rows)
    if (r.x >= thr) late.push_back(r);
  k.e = regmod::estimate_E(late, k.d).value;

  regmod::apply_error_terms(rows, k);

  out << "x,sum_rho,sum_rho_over_phi,sum_phi_over_rho,sum_recip_rho,"
         "err_rho,err_B,err_C,err_D\n";
  for (const auto& r : rows)
    out << r.x << ',' << r.sum_rho << ',' << fmt(r.sum_rho_over_phi) << ','
        << fmt(r.sum_phi_over_rho) << ',' << fmt(r.sum_recip_rho) << ',' << fmt(r.err_rho)
        << ',' << fmt(r.err_b) << ',' << fmt(r.err_c) << ',' << fmt(r.err_d) << '\n';
  return 0;
}

void print_constant(std::ostream& out, const regmod::ConstantEstimate& c) {
  out << c.name << ',' << fmt(c.value) << ',' << fmt(c.lower) << ',' << fmt(c.upper) << ','
      << c.prime_cutoff << ',' << c.method << '\n';
}

int run_constants(u64 cutoff, int depth, int nu_max) {
  std::cout << "name,value,lower,upper,cutoff,method\n";
  print_constant(std::cout, regmod::constant_A(cutoff));
  print_constant(std::cout, regmod::constant_B());
  print_constant(std::cout, regmod::constant_C(cutoff, depth));
  print_constant(std::cout, regmod::constant_D(cutoff, nu_max));
  print_constant(std::cout, regmod::constant_K());
  regmod::GammaConstants g = regmod::gamma_constants();
  auto ref = [](const char* name, double v) {
    regmod::ConstantEstimate c;
    c.name = name;
    c.value = c.lower = c.upper = v;
    c.prime_cutoff = 0;
    c.method = "reference";
    return c;
  };
  print_constant(std::cout, ref("gamma", g.gamma));
  print_constant(std::cout, ref("e_gamma", g.e_gamma));
  print_constant(std::cout, ref("e_neg_gamma", g.e_neg_gamma));
  return 0;
}

int run_verify(u64 n_max, bool inject_fault) {
  if (inject_fault) {
    // Corrupt one rho entry and demand that the pointwise audit reports
    // exactly that index as its first failure.
    regmod::ArithmeticTable t = regmod::sieve_table(n_max);
    const u64 target = n_max / 2 + 1;
    std::vector<regmod::u32> spf(t.spf_column().begin(), t.spf_column().end());
    std::vector<regmod::u32> phi(t.phi_column().begin(), t.phi_column().end());
    std::vector<regmod::u32> rho(t.rho_column().begin(), t.rho_column().end());
    rho[target] += 1;
    auto corrupted = regmod::ArithmeticTable::from_columns(n_max, std::move(spf),
                                                           std::move(phi), std::move(rho));
    regmod::SuiteReport rep = regmod::check_table_pointwise(corrupted);
    if (!rep.ok() && rep.first_failure == target) {
      std::cout << "fault injected at n=" << target << ": detected\n";
      return 0;
    }
    std::cout << "fault injected at n=" << target << ": NOT DETECTED\n";
    return 1;
  }

  bool all_ok = true;
  auto report = [&](const char* name, const regmod::SuiteReport& rep) {
    if (rep.ok()) {
      std::cout << name << ": ok (" << rep.checked << " checked)\n";
    } else {
      std::cout << name << ": FAIL at n=" << rep.first_failure.value_or(0) << " (" << rep.detail
                << ")\n";
      all_ok = false;
    }
  };
  report("equivalence", regmod::check_equivalence_suite(n_max));
  report("rho-consistency", regmod::check_rho_consistency(n_max));
  report("sums", regmod::check_sum_suite(n_max));
  regmod::ArithmeticTable t = regmod::sieve_table(n_max);
  report("table-properties", regmod::check_table_properties(t));
  report("table-pointwise", regmod::check_table_pointwise(t));
  regmod::IdentityReport idr = regmod::verify_identities(n_max);
  if (idr.ok()) {
    std::cout << "identities: ok (" << idr.checked << " checked)\n";
  } else {
    std::cout << "identities: FAIL at n=" << idr.first_failure.value_or(0) << " (identity "
              << idr.failed_identity << ")\n";
    all_ok = false;
  }
  return all_ok ? 0 : 1;
}

int run_extremal(const std::string& kind, const std::vector<u64>& ys) {
  std::vector<regmod::ExtremalSample> samples =
      kind == "min" ? regmod::minimal_order_sequence(ys) : regmod::maximal_order_sequence(ys);
  std::cout << "y,log_n,ratio,limit,deviation\n";
  for (const auto& s : samples)
    std::cout << s.y << ',' << fmt(s.log_n) << ',' << fmt(s.ratio) << ',' << fmt(s.limit)
              << ',' << fmt(s.deviation) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic of regular integers modulo n: evaluation, enumeration, "
               "sieved tables, partial sums, constants, and self-verification."};
  app.require_subcommand(1);

  std::string eval_fn;
  std::vector<u64> eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate one function at a point");
  eval->add_option("function", eval_fn, "rho | phi | s | weak-order | unitary-divisors")
      ->required()
      ->check(CLI::IsMember({"rho", "phi", "s", "weak-order", "unitary-divisors"}));
  eval->add_option("args", eval_args, "n, or `a n` for weak-order")->required()->expected(-1);

  u64 enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List the regular residues mod n");
  enumerate->add_option("n", enum_n, "modulus")->required()->check(CLI::PositiveNumber);

  u64 sieve_n = 0;
  std::string sieve_out;
  auto* sieve = app.add_subcommand("sieve", "Emit the n,spf,phi,rho table for n <= N");
  sieve->add_option("n_max", sieve_n, "table size")->required()->check(CLI::PositiveNumber);
  sieve->add_option("--out", sieve_out, "write CSV here instead of stdout");

  u64 sums_max = 1000000, sums_cutoff = 100000;
  int sums_depth = 30, sums_numax = 60;
  std::string sums_out;
  auto* sums = app.add_subcommand("sums", "Partial sums at checkpoints with error terms");
  sums->add_option("--max-x", sums_max, "largest checkpoint")->check(CLI::Range(u64(4000), regmod::kMaxSieveN));
  sums->add_option("--cutoff", sums_cutoff, "prime cutoff for the constants")
      ->check(CLI::Range(u64(100), u64(100000000)));
  sums->add_option("--depth", sums_depth, "series depth per prime")->check(CLI::Range(1, 200));
  sums->add_option("--nu-max", sums_numax, "exponent cap per prime")->check(CLI::Range(1, 200));
  sums->add_option("--out", sums_out, "write CSV here instead of stdout");

  u64 const_cutoff = 100000;
  int const_depth = 30, const_numax = 60;
  auto* consts = app.add_subcommand("constants", "Emit the constants with enclosures");
  consts->add_option("--cutoff", const_cutoff, "prime cutoff")
      ->check(CLI::Range(u64(100), u64(100000000)));
  consts->add_option("--depth", const_depth, "series depth per prime")->check(CLI::Range(1, 200));
  consts->add_option("--nu-max", const_numax, "exponent cap per prime")->check(CLI::Range(1, 200));

  u64 verify_n = 200;
  bool verify_fault = false;
  auto* verify = app.add_subcommand("verify", "Run the self-check suites");
  verify->add_option("--n-max", verify_n, "upper bound for every suite")
      ->check(CLI::Range(u64(2), u64(1000000)));
  verify->add_flag("--inject-fault", verify_fault,
                   "corrupt one table entry and require the audit to catch it");

  std::string ext_kind = "min";
  std::vector<u64> ext_ys = {1000, 10000, 100000, 1000000};
  auto* extremal = app.add_subcommand("extremal", "Sample the extremal sequences");
  extremal->add_option("--kind", ext_kind, "min | max")
      ->check(CLI::IsMember({"min", "max"}));
  extremal->add_option("--y-values", ext_ys, "prime bounds, comma separated")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return run_eval(eval_fn, eval_args);
    if (*enumerate) return run_enumerate(enum_n);
    if (*sieve) return run_sieve(sieve_n, sieve_out);
    if (*sums) return run_sums(sums_max, sums_cutoff, sums_depth, sums_numax, sums_out);
    if (*consts) return run_constants(const_cutoff, const_depth, const_numax);
    if (*verify) return run_verify(verify_n, verify_fault);
    if (*extremal) return run_extremal(ext_kind, ext_ys);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
