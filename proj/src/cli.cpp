#include "arith/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "arith/catalogue.hpp"
#include "arith/expr.hpp"
#include "arith/io.hpp"
#include "arith/structure.hpp"
#include "arith/transcend.hpp"

namespace arith::cli {

namespace {

struct Options {
  std::string expression;
  long long bound = 1000;
  long long index = 0;
  std::string backend = "rational";
  std::string format = "text";
  std::string kind;
  std::string out_file;
  std::string target;
  long long prime = 0;
  double eps = kDefaultEpsilon;
  double tol = kDefaultCheckTolerance;
  bool normalize_unit = false;
};

void check_bound(long long n) {
  if (n < 1 || n > kMaxCliBound) {
    throw Error(ErrorKind::kInvalidBound,
                "--n must be in 1.." + std::to_string(kMaxCliBound) + ", got " + std::to_string(n));
  }
}

template <Coefficient T>
ArithFn<T> evaluate_text(const Options& opt, const SpfSieve& sieve) {
  const expr::Expr e = expr::parse_expr(opt.expression);
  const expr::EvalContext ctx{sieve, opt.bound, opt.eps, opt.normalize_unit, opt.expression};
  return expr::evaluate<T>(e, ctx);
}

template <class F>
int with_backend(const Options& opt, F&& f) {
  if (opt.backend == "rational") return f.template operator()<Rational>();
  if (opt.backend == "complex") return f.template operator()<Complex>();
  throw Error(ErrorKind::kInvalidValue, "unknown backend '" + opt.backend + "'");
}

int cmd_eval(const Options& opt, std::ostream& out) {
  check_bound(opt.bound);
  if (opt.index < 1 || opt.index > opt.bound) {
    throw Error(ErrorKind::kRange, "n = " + std::to_string(opt.index) + " outside 1.." +
                                       std::to_string(opt.bound) + " (raise --n)");
  }
  const SpfSieve sieve(opt.bound);
  return with_backend(opt, [&]<class T>() {
    out << evaluate_text<T>(opt, sieve)[opt.index].str() << '\n';
    return kOk;
  });
}

int cmd_table(const Options& opt, std::ostream& out) {
  check_bound(opt.bound);
  const SpfSieve sieve(opt.bound);
  return with_backend(opt, [&]<class T>() {
    const ArithFn<T> a = evaluate_text<T>(opt, sieve);
    if (opt.format == "csv") {
      io::write_csv(out, a);
    } else if (opt.format == "json") {
      out << io::to_json(a).dump() << '\n';
    } else {
      const auto width = static_cast<int>(std::to_string(a.bound()).size());
      for (std::int64_t n = 1; n <= a.bound(); ++n) {
        out << std::setw(width) << n << "  " << a[n].str() << '\n';
      }
    }
    return kOk;
  });
}

int cmd_check(const Options& opt, std::ostream& out) {
  check_bound(opt.bound);
  const SpfSieve sieve(opt.bound);
  return with_backend(opt, [&]<class T>() {
    const ArithFn<T> a = evaluate_text<T>(opt, sieve);
    StructureCheck<T> result;
    if (opt.kind == "multiplicative") {
      result = is_multiplicative(a, opt.tol);
    } else if (opt.kind == "completely-multiplicative") {
      result = is_completely_multiplicative(a, sieve, opt.tol);
    } else if (opt.kind == "additive") {
      result = is_additive(a, opt.tol);
    } else if (opt.kind == "completely-additive") {
      result = is_completely_additive(a, sieve, opt.tol);
    } else {
      result = mobius_additivity_test(a, sieve, opt.tol);
    }
    out << opt.kind << ": " << (result.holds ? "true" : "false") << '\n';
    if (!result.holds) {
      out << "witness: " << result.witness.str() << '\n';
      return kCheckFailed;
    }
    return kOk;
  });
}

int cmd_transform(const Options& opt, std::ostream& out) {
  check_bound(opt.bound);
  const SpfSieve sieve(opt.bound);
  return with_backend(opt, [&]<class T>() {
    ArithFn<T> a = evaluate_text<T>(opt, sieve);
    if (opt.normalize_unit && (opt.kind == "psi" || opt.kind == "log")) {
      a = normalize_unit(a, opt.eps);
    }
    ArithFn<T> result = opt.kind == "psi"    ? psi(a, opt.eps)
                        : opt.kind == "psiinv" ? psi_inv(a, opt.eps)
                        : opt.kind == "log"    ? dlog(a, opt.eps)
                                               : dexp(a, opt.eps);
    if (opt.out_file.empty()) {
      io::write_csv(out, result);
    } else {
      io::save_file(opt.out_file, result);
    }
    return kOk;
  });
}

int cmd_bell(const Options& opt, std::ostream& out) {
  check_bound(opt.bound);
  const SpfSieve sieve(opt.bound);
  return with_backend(opt, [&]<class T>() {
    const ArithFn<T> a = evaluate_text<T>(opt, sieve);
    out << io::to_json(bell_series(a, opt.prime, sieve)).dump() << '\n';
    return kOk;
  });
}

int cmd_verify(const Options& opt, std::ostream& out) {
  check_bound(opt.bound);
  if (!(opt.tol > 0)) throw Error(ErrorKind::kInvalidValue, "--tol must be positive");
  const SpfSieve sieve(opt.bound);
  const IdentityReport report = verify_identities(sieve, opt.bound, opt.tol);
  for (const auto& r : report.entries) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ' ' << r.backend << " N=" << r.bound;
    if (!r.passed) {
      out << " first_failure=" << r.first_failure << " max_deviation=" << r.max_deviation;
    }
    out << '\n';
  }
  return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_import(const Options& opt, std::ostream& out) {
  const io::AnyFn data = io::load_file(opt.target);
  out << "bound: " << io::bound_of(data) << '\n'
      << "backend: " << io::backend_of(data) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated arithmetical functions: Dirichlet ring, formal log/exp, Bell series"};
  app.require_subcommand(1);
  Options opt;

  const std::string backend_help = "coefficient backend: rational (exact, default) or complex";
  const std::string eps_help = "float threshold for 'nonzero' (a(1) checks, support)";
  auto common = [&](CLI::App* sub, long long default_bound) {
    opt.bound = default_bound;
    sub->add_option("--n", opt.bound, "truncation bound N (max 10^7)")->capture_default_str();
    sub->add_option("--backend", opt.backend, backend_help)
        ->check(CLI::IsMember({"rational", "complex"}));
    sub->add_option("--eps", opt.eps, eps_help)->capture_default_str();
    sub->add_option("--tol", opt.tol, "float comparison tolerance for checks")
        ->capture_default_str();
    sub->add_flag("--normalize-unit", opt.normalize_unit,
                  "divide by a(1) before log/psi (off: a(1) != 1 is an error)");
  };

  auto* eval = app.add_subcommand("eval", "value of EXPR at n");
  eval->add_option("EXPR", opt.expression)->required();
  eval->add_option("INDEX", opt.index, "index n in 1..N")->required();
  auto* table = app.add_subcommand("table", "tabulate EXPR for n = 1..N");
  table->add_option("EXPR", opt.expression)->required();
  table->add_option("--format", opt.format)->check(CLI::IsMember({"text", "csv", "json"}));
  auto* check = app.add_subcommand("check", "structure predicate on EXPR");
  check->add_option("KIND", opt.kind)
      ->required()
      ->check(CLI::IsMember({"multiplicative", "completely-multiplicative", "additive",
                             "completely-additive", "additive-mobius"}));
  check->add_option("EXPR", opt.expression)->required();
  auto* transform = app.add_subcommand("transform", "apply psi, psiinv, log or exp");
  transform->add_option("KIND", opt.kind)
      ->required()
      ->check(CLI::IsMember({"psi", "psiinv", "log", "exp"}));
  transform->add_option("EXPR", opt.expression)->required();
  transform->add_option("--out", opt.out_file, "output file (.json or CSV); stdout CSV if absent");
  auto* bell = app.add_subcommand("bell", "Bell series of EXPR at a prime");
  bell->add_option("EXPR", opt.expression)->required();
  bell->add_option("--prime", opt.prime)->required();
  auto* verify = app.add_subcommand("verify", "run the closed-form identity suite");
  verify->add_option("WHAT", opt.target)->required()->check(CLI::IsMember({"identities"}));
  auto* import = app.add_subcommand("import", "validate a CSV/JSON function file");
  import->add_option("FILE", opt.target)->required();

  for (CLI::App* sub : {eval, table, check, transform, bell}) common(sub, 1000);
  verify->add_option("--n", opt.bound, "truncation bound N");
  verify->add_option("--tol", opt.tol, "tolerance for float identities");

  // Defaults that depend on the subcommand.
  opt.bound = 1000;
  const bool is_verify = !args.empty() && args.front() == "verify";
  if (is_verify) opt.bound = 10000;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*eval) return cmd_eval(opt, out);
    if (*table) return cmd_table(opt, out);
    if (*check) return cmd_check(opt, out);
    if (*transform) return cmd_transform(opt, out);
    if (*bell) return cmd_bell(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*import) return cmd_import(opt, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace arith::cli
