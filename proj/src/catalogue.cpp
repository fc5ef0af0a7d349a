#include "arith/catalogue.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "arith/dirichlet.hpp"
#include "arith/structure.hpp"

namespace arith {

namespace {

struct NameEntry {
  std::string_view spelling;
  CatalogueName name;
};

constexpr NameEntry kNames[] = {
    {"I", CatalogueName::kIdentity},
    {"u", CatalogueName::kUnit},
    {"mu", CatalogueName::kMobius},
    {"mobius", CatalogueName::kMobius},
    {"phi", CatalogueName::kPhi},
    {"Lambda", CatalogueName::kMangoldt},
    {"mangoldt", CatalogueName::kMangoldt},
    {"lambda_liouville", CatalogueName::kLiouville},
    {"liouville", CatalogueName::kLiouville},
    {"d", CatalogueName::kDivisors},
    {"sigma", CatalogueName::kSigma},
    {"N", CatalogueName::kNatural},
    {"nu", CatalogueName::kNu},
    {"Omega", CatalogueName::kOmega},
};

}  // namespace

std::optional<CatalogueName> parse_catalogue_name(std::string_view text) {
  for (const auto& entry : kNames) {
    if (entry.spelling == text) return entry.name;
  }
  return std::nullopt;
}

std::string_view catalogue_name(CatalogueName name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.spelling;
  }
  return "?";
}

namespace {

template <Coefficient T>
ArithFn<T> sigma(const SpfSieve& sieve, std::int64_t bound, double c) {
  (void)sieve;
  ArithFn<T> out(bound);
  if constexpr (CoefficientTraits<T>::kExact) {
    if (c < 0 || c != std::floor(c)) {
      throw Error(ErrorKind::kUnsupportedBackend,
                  "sigma(c) with non-integer or negative c needs the complex backend");
    }
    const auto exponent = static_cast<unsigned long>(c);
    mpz_class power;
    for (std::int64_t d = 1; d <= bound; ++d) {
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), exponent);
      const Rational term{mpq_class(power)};
      for (std::int64_t m = d; m <= bound; m += d) out[m] += term;
    }
  } else {
    for (std::int64_t d = 1; d <= bound; ++d) {
      const T term(std::pow(static_cast<double>(d), c));
      for (std::int64_t m = d; m <= bound; m += d) out[m] += term;
    }
  }
  return out;
}

}  // namespace

template <Coefficient T>
ArithFn<T> make(CatalogueName name, const SpfSieve& sieve, std::int64_t bound,
                double sigma_exponent) {
  require_sieve_covers(sieve, bound);
  auto from_long = [](long v) { return T(v); };
  switch (name) {
    case CatalogueName::kIdentity:
      return ArithFn<T>::identity(bound);
    case CatalogueName::kUnit:
      return ArithFn<T>::constant(bound, T(1L));
    case CatalogueName::kMobius:
      return ArithFn<T>::tabulate(bound, [&](std::int64_t n) {
        const Factorization f = sieve.factorize(n);
        for (const auto& pk : f) {
          if (pk.exponent > 1) return from_long(0);
        }
        return from_long(f.size() % 2 == 0 ? 1 : -1);
      });
    case CatalogueName::kPhi:
      return ArithFn<T>::tabulate(bound, [&](std::int64_t n) {
        std::int64_t phi = n;
        for (const auto& pk : sieve.factorize(n)) phi = phi / pk.prime * (pk.prime - 1);
        return from_long(static_cast<long>(phi));
      });
    case CatalogueName::kMangoldt:
      if constexpr (CoefficientTraits<T>::kExact) {
        throw Error(ErrorKind::kUnsupportedBackend,
                    "Lambda needs the complex backend (values are ln p)");
      } else {
        return ArithFn<T>::tabulate(bound, [&](std::int64_t n) {
          if (n < 2) return T();
          const auto pp = sieve.prime_power_part(n);
          return pp ? T(std::log(static_cast<double>(pp->prime))) : T();
        });
      }
    case CatalogueName::kLiouville:
      return ArithFn<T>::tabulate(bound, [&](std::int64_t n) {
        return from_long(sieve.omega_count(n) % 2 == 0 ? 1 : -1);
      });
    case CatalogueName::kDivisors:
      return ArithFn<T>::tabulate(bound, [&](std::int64_t n) {
        long count = 1;
        for (const auto& pk : sieve.factorize(n)) count *= pk.exponent + 1;
        return from_long(count);
      });
    case CatalogueName::kSigma:
      return sigma<T>(sieve, bound, sigma_exponent);
    case CatalogueName::kNatural:
      return ArithFn<T>::tabulate(bound, [&](std::int64_t n) { return from_long(static_cast<long>(n)); });
    case CatalogueName::kNu:
      return ArithFn<T>::tabulate(bound, [&](std::int64_t n) { return from_long(sieve.nu_count(n)); });
    case CatalogueName::kOmega:
      return ArithFn<T>::tabulate(bound, [&](std::int64_t n) { return from_long(sieve.omega_count(n)); });
  }
  throw Error(ErrorKind::kInvalidValue, "unknown catalogue function");
}

template ArithFn<Rational> make(CatalogueName, const SpfSieve&, std::int64_t, double);
template ArithFn<Complex> make(CatalogueName, const SpfSieve&, std::int64_t, double);

bool IdentityReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const IdentityResult& r) { return r.passed; });
}

namespace {

// Folds one comparison of lhs against rhs into an entry.
template <Coefficient T>
void compare_into(IdentityResult& entry, const ArithFn<T>& lhs, const ArithFn<T>& rhs,
                  double tol) {
  for (std::int64_t n = 1; n <= lhs.bound(); ++n) {
    const double dev = CoefficientTraits<T>::distance(lhs[n], rhs[n]);
    entry.max_deviation = std::max(entry.max_deviation, dev);
    if (!CoefficientTraits<T>::equal(lhs[n], rhs[n], tol) &&
        (entry.first_failure == 0 || n < entry.first_failure)) {
      entry.first_failure = n;
    }
  }
}

// Closed-form per-prime series of a multiplicative catalogue function.
using SeriesAt = std::function<std::vector<Rational>(std::int64_t p, std::size_t length)>;

RationalFn from_bell(const SeriesAt& closed_form, const SpfSieve& sieve, std::int64_t bound) {
  BellDecomposition<Rational> d{bound, BellKind::kMultiplicative, {}};
  for (std::int64_t p : sieve.primes()) {
    if (p > bound) break;
    const auto length = static_cast<std::size_t>(floor_log(p, bound)) + 1;
    d.series.push_back({p, closed_form(p, length)});
  }
  return bell_reconstruct_mult(d, sieve);
}

// Prime support from per-prime series with zero constant term.
template <Coefficient T>
PrimeSupport<T> from_additive_series(
    const std::function<std::vector<T>(std::int64_t p, std::size_t length)>& closed_form,
    const SpfSieve& sieve, std::int64_t bound) {
  PrimeSupport<T> g{bound, {}};
  for (std::int64_t p : sieve.primes()) {
    if (p > bound) break;
    const auto length = static_cast<std::size_t>(floor_log(p, bound)) + 1;
    const std::vector<T> f = closed_form(p, length);
    for (std::size_t k = 1; k < f.size(); ++k) {
      if (!f[k].is_zero()) g.values.emplace(std::make_pair(p, static_cast<int>(k)), f[k]);
    }
  }
  return g;
}

std::vector<Rational> one_minus_x(std::size_t length) {
  std::vector<Rational> f(length);
  f[0] = 1;
  if (length > 1) f[1] = -1;
  return f;
}

// x / (1 - c x) scaled by weight.
template <Coefficient T>
std::vector<T> shifted_geometric(const T& weight, std::size_t length) {
  std::vector<T> f(length);
  for (std::size_t k = 1; k < length; ++k) f[k] = weight;
  return f;
}

}  // namespace

IdentityReport verify_identities(const SpfSieve& sieve, std::int64_t bound, double tol) {
  require_sieve_covers(sieve, bound);
  IdentityReport report;
  auto entry = [&](std::string name, std::string backend) -> IdentityResult& {
    report.entries.push_back({std::move(name), bound, std::move(backend), false, 0, 0.0});
    return report.entries.back();
  };
  auto finish = [](IdentityResult& e) { e.passed = e.first_failure == 0; };
  auto def = [&](CatalogueName name) { return make<Rational>(name, sieve, bound); };
  using series::geometric;
  using series::multiply;
  const Rational one(1L);

  const RationalFn u = def(CatalogueName::kUnit);
  const RationalFn mu = def(CatalogueName::kMobius);

  {
    auto& e = entry("u", "rational");
    compare_into(e, u, from_bell([&](std::int64_t, std::size_t len) { return geometric(one, len); },
                                 sieve, bound), tol);
    finish(e);
  }
  {
    auto& e = entry("mu", "rational");
    compare_into(e, mu, from_bell([](std::int64_t, std::size_t len) { return one_minus_x(len); },
                                  sieve, bound), tol);
    compare_into(e, mu, dirichlet_inv(u), tol);
    finish(e);
  }
  {
    auto& e = entry("phi", "rational");
    const RationalFn phi = def(CatalogueName::kPhi);
    compare_into(e, phi, from_bell([](std::int64_t p, std::size_t len) {
                   return multiply(one_minus_x(len), geometric(Rational(static_cast<long>(p)), len));
                 }, sieve, bound), tol);
    compare_into(e, phi, dirichlet_mul(mu, def(CatalogueName::kNatural)), tol);
    finish(e);
  }
  {
    auto& e = entry("lambda_liouville", "rational");
    compare_into(e, def(CatalogueName::kLiouville),
                 from_bell([](std::int64_t, std::size_t len) { return geometric(Rational(-1L), len); },
                           sieve, bound), tol);
    finish(e);
  }
  {
    auto& e = entry("Lambda", "complex");
    const ComplexFn lambda = make<Complex>(CatalogueName::kMangoldt, sieve, bound);
    const PrimeSupport<Complex> g = from_additive_series<Complex>(
        [](std::int64_t p, std::size_t len) {
          return shifted_geometric(Complex(std::log(static_cast<double>(p))), len);
        },
        sieve, bound);
    compare_into(e, lambda, extend_by_zero(g), tol);
    const ComplexFn u_c = ArithFn<Complex>::constant(bound, Complex(1L));
    const ComplexFn log_n = ArithFn<Complex>::tabulate(
        bound, [](std::int64_t n) { return Complex(std::log(static_cast<double>(n))); });
    compare_into(e, dirichlet_mul(u_c, lambda), log_n, tol);
    compare_into(e, dirichlet_mul(to_complex(mu), derivative(u_c)), lambda, tol);
    finish(e);
  }
  {
    auto& e = entry("d", "rational");
    const RationalFn d = def(CatalogueName::kDivisors);
    compare_into(e, d, from_bell([&](std::int64_t, std::size_t len) {
                   return multiply(geometric(one, len), geometric(one, len));
                 }, sieve, bound), tol);
    compare_into(e, d, dirichlet_pow(u, 2), tol);
    finish(e);
  }
  {
    auto& e = entry("N", "rational");
    compare_into(e, def(CatalogueName::kNatural),
                 from_bell([](std::int64_t p, std::size_t len) {
                   return geometric(Rational(static_cast<long>(p)), len);
                 }, sieve, bound), tol);
    finish(e);
  }
  {
    auto& e = entry("sigma(1)", "rational");
    compare_into(e, make<Rational>(CatalogueName::kSigma, sieve, bound, 1.0),
                 from_bell([&](std::int64_t p, std::size_t len) {
                   return multiply(geometric(one, len), geometric(Rational(static_cast<long>(p)), len));
                 }, sieve, bound), tol);
    finish(e);
  }
  {
    auto& e = entry("nu", "rational");
    const PrimeSupport<Rational> g = from_additive_series<Rational>(
        [](std::int64_t, std::size_t len) {
          std::vector<Rational> f(len);
          if (len > 1) f[1] = 1;
          return f;
        },
        sieve, bound);
    compare_into(e, def(CatalogueName::kNu), additive_reconstruct(g, bound, sieve), tol);
    finish(e);
  }
  {
    auto& e = entry("Omega", "rational");
    const PrimeSupport<Rational> g = from_additive_series<Rational>(
        [](std::int64_t, std::size_t len) { return shifted_geometric(Rational(1L), len); }, sieve,
        bound);
    compare_into(e, def(CatalogueName::kOmega), additive_reconstruct(g, bound, sieve), tol);
    finish(e);
  }
  return report;
}

}  // namespace arith
