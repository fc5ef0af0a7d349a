#pragma once

// Independent reference computations for tests. Nothing here uses the sieve
// or the convolution kernels.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "arith/arith_fn.hpp"

namespace oracle {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::pair<std::int64_t, int>> trial_factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::int64_t> divisors_by_scan(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline int mobius(std::int64_t n) {
  int sign = 1;
  for (const auto& [p, k] : trial_factor(n)) {
    if (k > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::int64_t totient_by_count(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

inline std::int64_t sigma_by_scan(std::int64_t n, int c) {
  std::int64_t total = 0;
  for (std::int64_t d : divisors_by_scan(n)) {
    std::int64_t power = 1;
    for (int i = 0; i < c; ++i) power *= d;
    total += power;
  }
  return total;
}

/// Direct per-index Dirichlet sum, looping d = 1..n and testing divisibility.
template <class T>
arith::ArithFn<T> naive_mul(const arith::ArithFn<T>& a, const arith::ArithFn<T>& b) {
  arith::ArithFn<T> out(a.bound());
  for (std::int64_t n = 1; n <= a.bound(); ++n) {
    T sum;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) sum = sum + a[d] * b[n / d];
    }
    out[n] = sum;
  }
  return out;
}

/// Random rational p/q with |p| <= span, 1 <= q <= max_den.
inline arith::Rational random_rational(std::mt19937_64& rng, long span = 3, long max_den = 4) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return arith::rational(num(rng), den(rng));
}

inline arith::RationalFn random_rational_fn(std::mt19937_64& rng, std::int64_t bound,
                                            std::optional<long> head = std::nullopt) {
  arith::RationalFn out(bound);
  for (std::int64_t n = 1; n <= bound; ++n) out[n] = random_rational(rng);
  if (head) out[1] = *head;
  return out;
}

inline arith::ComplexFn random_complex_fn(std::mt19937_64& rng, std::int64_t bound,
                                          std::optional<double> head = std::nullopt,
                                          double half_width = 0.5) {
  std::uniform_real_distribution<double> dist(-half_width, half_width);
  arith::ComplexFn out(bound);
  for (std::int64_t n = 1; n <= bound; ++n) out[n] = arith::Complex(dist(rng), dist(rng));
  if (head) out[1] = arith::Complex(*head);
  return out;
}

}  // namespace oracle
