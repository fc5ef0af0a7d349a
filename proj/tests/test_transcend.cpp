#include <doctest.h>

#include <random>

#include "arith/dirichlet.hpp"
#include "arith/transcend.hpp"
#include "oracles.hpp"

using namespace arith;

namespace {

RationalFn unit(std::int64_t n) { return RationalFn::constant(n, Rational(1)); }

// log series with many more terms than needed, using the naive product.
RationalFn naive_log(const RationalFn& a, int terms) {
  RationalFn b = a;
  b[1] = Rational(0);
  RationalFn power = b;
  RationalFn out(a.bound());
  for (int k = 1; k <= terms; ++k) {
    if (k > 1) power = oracle::naive_mul(power, b);
    out = point_add(out, scalar_mul(rational(k % 2 ? 1 : -1, k), power));
  }
  return out;
}

RationalFn random_multiplicative(std::mt19937_64& rng, std::int64_t bound) {
  // Values at prime powers are free; the rest follow from coprime products.
  RationalFn a(bound);
  a[1] = Rational(1);
  for (std::int64_t n = 2; n <= bound; ++n) {
    const auto f = oracle::trial_factor(n);
    if (f.size() == 1) {
      a[n] = oracle::random_rational(rng);
    } else {
      std::int64_t pk = 1;
      for (int i = 0; i < f[0].second; ++i) pk *= f[0].first;
      a[n] = a[pk] * a[n / pk];
    }
  }
  return a;
}

}  // namespace

TEST_CASE("series_terms is floor(log2 N)") {
  CHECK(series_terms(1) == 0);
  CHECK(series_terms(2) == 1);
  CHECK(series_terms(4095) == 11);
  CHECK(series_terms(4096) == 12);
}

TEST_CASE("dlog examples") {
  CHECK(dlog(RationalFn::identity(100)) == RationalFn::zero(100));
  const RationalFn l = dlog(unit(500));
  for (std::int64_t p : {2, 3, 5, 97, 499}) CHECK(l[p] == Rational(1));
  CHECK(l[4] == rational(1, 2));
  CHECK(l[6] == Rational(0));
  CHECK(l[8] == rational(1, 3));
  CHECK(l == naive_log(unit(500), series_terms(500) + 4));
}

TEST_CASE("dlog agrees with a long naive series on random input") {
  std::mt19937_64 rng(11);
  const RationalFn a = oracle::random_rational_fn(rng, 300, 1);
  CHECK(dlog(a) == naive_log(a, 12));
}

TEST_CASE("domain errors") {
  RationalFn bad = unit(10);
  bad[1] = Rational(2);
  try {
    (void)dlog(bad);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
    CHECK(std::string(e.what()).find("got 2") != std::string::npos);
  }
  CHECK_THROWS_AS(dexp(unit(10)), Error);
  CHECK_THROWS_AS(psi(bad), Error);
  CHECK_THROWS_AS(psi_inv(unit(10)), Error);
}

TEST_CASE("float head tolerance and normalize_unit") {
  ComplexFn a = ComplexFn::constant(64, Complex(1.0));
  a[1] = Complex(1.0 + 1e-14);
  CHECK_NOTHROW(dlog(a));
  a[1] = Complex(1.0 + 1e-6);
  CHECK_THROWS_AS(dlog(a), Error);
  RationalFn twice = scalar_mul(Rational(2), unit(64));
  CHECK(normalize_unit(twice) == unit(64));
  CHECK_THROWS_AS(normalize_unit(RationalFn::zero(4)), Error);
}

TEST_CASE("dexp examples and bijectivity") {
  CHECK(dexp(RationalFn::zero(100)) == RationalFn::identity(100));
  std::mt19937_64 rng(12);
  const RationalFn m = random_multiplicative(rng, 4096);
  CHECK(dexp(dlog(m)) == m);
  const RationalFn z = oracle::random_rational_fn(rng, 1024, 0);
  CHECK(dlog(dexp(z)) == z);
}

TEST_CASE("log and exp are homomorphisms") {
  std::mt19937_64 rng(13);
  const RationalFn a = oracle::random_rational_fn(rng, 512, 1);
  const RationalFn b = oracle::random_rational_fn(rng, 512, 1);
  CHECK(dlog(dirichlet_mul(a, b)) == point_add(dlog(a), dlog(b)));
  const RationalFn x = oracle::random_rational_fn(rng, 512, 0);
  const RationalFn y = oracle::random_rational_fn(rng, 512, 0);
  CHECK(dexp(point_add(x, y)) == dirichlet_mul(dexp(x), dexp(y)));
  CHECK(psi(dirichlet_mul(a, b)) == point_add(psi(a), psi(b)));
  CHECK(psi_inv(point_add(x, y)) == dirichlet_mul(psi_inv(x), psi_inv(y)));
}

TEST_CASE("psi examples") {
  CHECK(psi(RationalFn::identity(50)) == RationalFn::zero(50));
  const RationalFn p = psi(unit(50));
  CHECK(p[4] == rational(3, 2));
  CHECK(p[6] == Rational(2));
  CHECK(psi_inv(RationalFn::zero(50)) == RationalFn::identity(50));
  const RationalFn phi = RationalFn::tabulate(
      4096, [](std::int64_t n) { return Rational(static_cast<long>(oracle::totient_by_count(n))); });
  CHECK(psi_inv(psi(phi)) == phi);
  const RationalFn nu = RationalFn::tabulate(
      300, [](std::int64_t n) { return Rational(static_cast<long>(oracle::trial_factor(n).size())); });
  const RationalFn m = psi_inv(nu);
  for (std::int64_t p : {2, 3, 5, 7, 293}) CHECK(m[p] == Rational(1));
  // Bell series exp(x): m(p^k) = 1/k!.
  CHECK(m[4] == rational(1, 2));
  CHECK(m[8] == rational(1, 6));
  CHECK(m[12] == rational(1, 2));
}

TEST_CASE("extra series terms change nothing") {
  std::mt19937_64 rng(14);
  RationalFn a = oracle::random_rational_fn(rng, 1024, 1);
  a[2] = Rational(1);
  const int k = series_terms(1024);
  CHECK(dlog_series(a, k + 5) == dlog(a));
  const RationalFn z = oracle::random_rational_fn(rng, 1024, 0);
  CHECK(dexp_series(z, k + 5) == dexp(z));
  // One term fewer is not enough at n = 2^K.
  CHECK_FALSE(dlog_series(a, k - 1) == dlog(a));
}

TEST_CASE("derivative identities in floats") {
  std::mt19937_64 rng(15);
  const ComplexFn a = oracle::random_complex_fn(rng, 3000, 1.0);
  CHECK(equal(derivative(dlog(a)), dirichlet_mul(derivative(a), dirichlet_inv(a)), 1e-9));
  const ComplexFn z = oracle::random_complex_fn(rng, 3000, 0.0);
  CHECK(equal(derivative(dexp(z)), dirichlet_mul(derivative(z), dexp(z)), 1e-9));
}
