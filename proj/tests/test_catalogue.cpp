#include <doctest.h>

#include <cmath>

#include "arith/catalogue.hpp"
#include "arith/dirichlet.hpp"
#include "arith/structure.hpp"
#include "arith/transcend.hpp"
#include "oracles.hpp"

using namespace arith;

namespace {

const SpfSieve& sieve() {
  static const SpfSieve s(10000);
  return s;
}

RationalFn cat(CatalogueName name, std::int64_t bound, double c = 0) {
  return make<Rational>(name, sieve(), bound, c);
}

}  // namespace

TEST_CASE("names") {
  CHECK(parse_catalogue_name("mu") == CatalogueName::kMobius);
  CHECK(parse_catalogue_name("mobius") == CatalogueName::kMobius);
  CHECK(parse_catalogue_name("Lambda") == CatalogueName::kMangoldt);
  CHECK(parse_catalogue_name("lambda_liouville") == CatalogueName::kLiouville);
  CHECK(parse_catalogue_name("Omega") == CatalogueName::kOmega);
  CHECK_FALSE(parse_catalogue_name("omega_typo").has_value());
  CHECK(catalogue_name(CatalogueName::kSigma) == "sigma");
}

TEST_CASE("definitional values") {
  CHECK(cat(CatalogueName::kPhi, 20)[12] == Rational(4));
  CHECK(cat(CatalogueName::kSigma, 20, 1)[6] == Rational(12));
  CHECK(cat(CatalogueName::kMobius, 40)[30] == Rational(-1));
  CHECK(cat(CatalogueName::kIdentity, 5) == RationalFn::identity(5));
}

TEST_CASE("definitional values agree with brute-force oracles") {
  const std::int64_t n_max = 1500;
  const RationalFn mu = cat(CatalogueName::kMobius, n_max);
  const RationalFn phi = cat(CatalogueName::kPhi, n_max);
  const RationalFn d = cat(CatalogueName::kDivisors, n_max);
  const RationalFn s1 = cat(CatalogueName::kSigma, n_max, 1);
  const RationalFn s2 = cat(CatalogueName::kSigma, n_max, 2);
  const RationalFn lam = cat(CatalogueName::kLiouville, n_max);
  const RationalFn nu = cat(CatalogueName::kNu, n_max);
  const RationalFn om = cat(CatalogueName::kOmega, n_max);
  const RationalFn nat = cat(CatalogueName::kNatural, n_max);
  const ComplexFn mangoldt = make<Complex>(CatalogueName::kMangoldt, sieve(), n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto f = oracle::trial_factor(n);
    int big_omega = 0;
    for (const auto& [p, k] : f) big_omega += k;
    CHECK(mu[n] == Rational(oracle::mobius(n)));
    CHECK(phi[n] == Rational(oracle::totient_by_count(n)));
    CHECK(d[n] == Rational(static_cast<long>(oracle::divisors_by_scan(n).size())));
    CHECK(s1[n] == Rational(oracle::sigma_by_scan(n, 1)));
    CHECK(s2[n] == Rational(oracle::sigma_by_scan(n, 2)));
    CHECK(lam[n] == Rational(big_omega % 2 == 0 ? 1 : -1));
    CHECK(nu[n] == Rational(static_cast<long>(f.size())));
    CHECK(om[n] == Rational(big_omega));
    CHECK(nat[n] == Rational(n));
    const double expected = f.size() == 1 ? std::log(static_cast<double>(f[0].first)) : 0.0;
    CHECK(mangoldt[n].im() == 0.0);
    CHECK(mangoldt[n].re() == doctest::Approx(expected).epsilon(1e-15));
  }
}

TEST_CASE("backend restrictions") {
  try {
    (void)make<Rational>(CatalogueName::kMangoldt, sieve(), 10);
    FAIL("expected backend error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUnsupportedBackend);
  }
  CHECK_THROWS_AS(make<Rational>(CatalogueName::kSigma, sieve(), 10, 0.5), Error);
  CHECK_THROWS_AS(make<Rational>(CatalogueName::kSigma, sieve(), 10, -1), Error);
  const ComplexFn half = make<Complex>(CatalogueName::kSigma, sieve(), 10, 0.5);
  CHECK(half[4].re() == doctest::Approx(1 + std::sqrt(2.0) + 2));
}

TEST_CASE("algebraic relations") {
  const std::int64_t n_max = 5000;
  const RationalFn u = cat(CatalogueName::kUnit, n_max);
  const RationalFn mu = cat(CatalogueName::kMobius, n_max);
  CHECK(dirichlet_inv(u) == mu);
  CHECK(dirichlet_mul(mu, cat(CatalogueName::kNatural, n_max)) == cat(CatalogueName::kPhi, n_max));
  CHECK(dirichlet_mul(u, u) == cat(CatalogueName::kDivisors, n_max));
  CHECK(dirichlet_mul(u, cat(CatalogueName::kNatural, n_max)) ==
        cat(CatalogueName::kSigma, n_max, 1));

  const RationalFn g_nu = dirichlet_mul(mu, cat(CatalogueName::kNu, n_max));
  const RationalFn g_omega = dirichlet_mul(mu, cat(CatalogueName::kOmega, n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto f = oracle::trial_factor(n);
    const bool prime = f.size() == 1 && f[0].second == 1;
    const bool prime_power = f.size() == 1;
    CHECK(g_nu[n] == Rational(prime ? 1 : 0));
    CHECK(g_omega[n] == Rational(prime_power ? 1 : 0));
  }
}

TEST_CASE("structure classification") {
  const std::int64_t n_max = 3000;
  for (auto name : {CatalogueName::kLiouville, CatalogueName::kNatural, CatalogueName::kUnit}) {
    CHECK(is_completely_multiplicative(cat(name, n_max), sieve()).holds);
  }
  for (auto name : {CatalogueName::kPhi, CatalogueName::kDivisors, CatalogueName::kMobius}) {
    const RationalFn a = cat(name, n_max);
    CHECK(is_multiplicative(a).holds);
    CHECK_FALSE(is_completely_multiplicative(a, sieve()).holds);
  }
  for (double c : {0.0, 1.0, 2.0, 3.0}) {
    const RationalFn a = cat(CatalogueName::kSigma, n_max, c);
    CHECK(is_multiplicative(a).holds);
    CHECK_FALSE(is_completely_multiplicative(a, sieve()).holds);
  }
  CHECK(is_additive(cat(CatalogueName::kNu, n_max)).holds);
  CHECK_FALSE(is_completely_additive(cat(CatalogueName::kNu, n_max), sieve()).holds);
  CHECK(is_completely_additive(cat(CatalogueName::kOmega, n_max), sieve()).holds);
}

TEST_CASE("psi maps catalogue multiplicative functions to additive ones") {
  const std::int64_t n_max = 2048;
  for (auto name : {CatalogueName::kUnit, CatalogueName::kMobius, CatalogueName::kPhi,
                    CatalogueName::kLiouville, CatalogueName::kDivisors, CatalogueName::kNatural}) {
    CHECK(is_additive(psi(cat(name, n_max))).holds);
  }
  CHECK(is_additive(psi(cat(CatalogueName::kSigma, n_max, 1))).holds);
  CHECK(is_additive(psi(cat(CatalogueName::kSigma, n_max, 2))).holds);
  for (auto name : {CatalogueName::kNu, CatalogueName::kOmega}) {
    CHECK(is_multiplicative(psi_inv(cat(name, n_max))).holds);
  }
  const RationalFn phi = cat(CatalogueName::kPhi, 4096);
  CHECK(psi_inv(psi(phi)) == phi);
  const RationalFn e_nu = psi_inv(cat(CatalogueName::kNu, 200));
  for (std::int64_t p : {2, 3, 5, 197, 199}) CHECK(e_nu[p] == Rational(1));
  CHECK(e_nu[4] == rational(1, 2));
}

TEST_CASE("verify_identities passes") {
  const IdentityReport report = verify_identities(sieve(), 10000, 1e-9);
  CHECK(report.entries.size() == 10);
  CHECK(report.all_passed());
  for (const auto& e : report.entries) {
    INFO(e.name);
    CHECK(e.passed);
    CHECK(e.first_failure == 0);
    CHECK(e.bound == 10000);
  }
  CHECK(report.entries[4].name == "Lambda");
  CHECK(report.entries[4].backend == "complex");
  CHECK(report.entries[4].max_deviation < 1e-9);
}

TEST_CASE("verify_identities rejects a sieve that is too small") {
  const SpfSieve small(100);
  CHECK_THROWS_AS(verify_identities(small, 1000, 1e-9), Error);
}
