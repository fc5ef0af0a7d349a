#pragma once

// Random multiplicative / additive functions built through their per-prime
// data, shared by structure, acceptance and property tests.

#include <random>

#include "arith/structure.hpp"
#include "oracles.hpp"

namespace gen {

inline arith::BellDecomposition<arith::Rational> random_bell(std::mt19937_64& rng,
                                                             const arith::SpfSieve& sieve,
                                                             std::int64_t bound) {
  arith::BellDecomposition<arith::Rational> d{bound, arith::BellKind::kMultiplicative, {}};
  for (std::int64_t p : sieve.primes()) {
    if (p > bound) break;
    std::vector<arith::Rational> coeffs(static_cast<std::size_t>(arith::floor_log(p, bound)) + 1);
    coeffs[0] = 1;
    for (std::size_t k = 1; k < coeffs.size(); ++k) coeffs[k] = oracle::random_rational(rng);
    d.series.push_back({p, std::move(coeffs)});
  }
  return d;
}

inline arith::RationalFn random_multiplicative(std::mt19937_64& rng, const arith::SpfSieve& sieve,
                                               std::int64_t bound) {
  return arith::bell_reconstruct_mult(random_bell(rng, sieve, bound), sieve);
}

inline arith::PrimeSupport<arith::Rational> random_support(std::mt19937_64& rng,
                                                           const arith::SpfSieve& sieve,
                                                           std::int64_t bound) {
  arith::PrimeSupport<arith::Rational> g{bound, {}};
  for (std::int64_t p : sieve.primes()) {
    if (p > bound) break;
    const int top = arith::floor_log(p, bound);
    for (int k = 1; k <= top; ++k) {
      arith::Rational v = oracle::random_rational(rng);
      if (!v.is_zero()) g.values.emplace(std::make_pair(p, k), v);
    }
  }
  return g;
}

inline arith::RationalFn random_additive(std::mt19937_64& rng, const arith::SpfSieve& sieve,
                                         std::int64_t bound) {
  return arith::additive_reconstruct(random_support(rng, sieve, bound), bound, sieve);
}

/// An additive function changed at one index that is 1 or has two distinct
/// prime factors, so the result is never additive.
inline arith::RationalFn random_non_additive(std::mt19937_64& rng, const arith::SpfSieve& sieve,
                                             std::int64_t bound) {
  arith::RationalFn a = random_additive(rng, sieve, bound);
  std::uniform_int_distribution<std::int64_t> pick(1, bound);
  std::int64_t n = 1;
  do {
    n = pick(rng);
  } while (n != 1 && sieve.nu_count(n) < 2);
  a[n] += arith::rational(1, 7);
  return a;
}

}  // namespace gen
