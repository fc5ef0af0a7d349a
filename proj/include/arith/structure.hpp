#pragma once

// Structure theory of truncated arithmetical functions: multiplicativity and
// additivity predicates, the Moebius-side additivity test, and conversions
// between a function and its per-prime power series.
//
// A multiplicative a is the product over primes of f_p(x_p), f_p(x) =
// sum_k a(p^k) x^k with constant term 1. An additive a is u times a sum of
// per-prime series g_p with constant term 0, where g = mu * a lives on prime
// powers only.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arith/arith_fn.hpp"
#include "arith/sieve.hpp"

namespace arith {

// Comparison tolerance used by the predicates in the complex backend.
inline constexpr double kDefaultCheckTolerance = 1e-9;

struct Witness {
  enum class Kind { kNone, kPair, kPrimePower, kIndex };

  Kind kind = Kind::kNone;
  std::int64_t first = 0;   // m, p or n
  std::int64_t second = 0;  // n or k

  static Witness pair(std::int64_t m, std::int64_t n) { return {Kind::kPair, m, n}; }
  static Witness prime_power(std::int64_t p, std::int64_t k) { return {Kind::kPrimePower, p, k}; }
  static Witness index(std::int64_t n) { return {Kind::kIndex, n, 0}; }

  /// "(2, 3)", "p=2, k=2", "n=1" or "" for kNone.
  std::string str() const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

template <Coefficient T>
struct StructureCheck {
  bool holds = true;
  Witness witness;
  // c_i = a(p_i) for every prime p_i <= N; filled only when a
  // completely-multiplicative / completely-additive check holds.
  std::vector<T> constants;

  explicit operator bool() const { return holds; }
};

/// a(1) = 1 and a(mn) = a(m) a(n) for all coprime m, n >= 2, mn <= N.
/// Failing at a(1) reports witness (1, 1); otherwise the lexicographically
/// least (m, n) with m < n.
template <Coefficient T>
StructureCheck<T> is_multiplicative(const ArithFn<T>& a, double tol = kDefaultCheckTolerance);

/// Multiplicative and a(p^k) = a(p)^k for every p^k <= N.
template <Coefficient T>
StructureCheck<T> is_completely_multiplicative(const ArithFn<T>& a, const SpfSieve& sieve,
                                               double tol = kDefaultCheckTolerance);

/// a(1) = 0 and a(mn) = a(m) + a(n) for all coprime m, n >= 2, mn <= N.
template <Coefficient T>
StructureCheck<T> is_additive(const ArithFn<T>& a, double tol = kDefaultCheckTolerance);

/// Additive and a(p^k) = k a(p) for every p^k <= N.
template <Coefficient T>
StructureCheck<T> is_completely_additive(const ArithFn<T>& a, const SpfSieve& sieve,
                                         double tol = kDefaultCheckTolerance);

/// Additivity via g = mu * a: holds iff g(n) = 0 at n = 1 and at every n with
/// at least two distinct prime factors. Witness is the least failing index.
template <Coefficient T>
StructureCheck<T> mobius_additivity_test(const ArithFn<T>& a, const SpfSieve& sieve,
                                         double tol = kDefaultCheckTolerance);

template <Coefficient T>
struct BellSeries {
  std::int64_t prime = 0;
  std::vector<T> coeffs;  // c_0 .. c_K, K = floor(log_p N)
};

enum class BellKind { kMultiplicative, kAdditive };

template <Coefficient T>
struct BellDecomposition {
  std::int64_t bound = 0;
  BellKind kind = BellKind::kMultiplicative;
  std::vector<BellSeries<T>> series;  // one per prime <= bound, ascending
};

/// Sparse (p, k) -> value for a function vanishing off prime powers. Only
/// nonzero values are stored.
template <Coefficient T>
struct PrimeSupport {
  std::int64_t bound = 0;
  std::map<std::pair<std::int64_t, int>, T> values;
};

/// Raw Bell coefficients a(p^k), k = 0..floor(log_p N), with c_0 = a(1). No
/// structure check.
template <Coefficient T>
BellSeries<T> bell_series(const ArithFn<T>& a, std::int64_t prime, const SpfSieve& sieve);

/// Throws kStructure (with the witness) unless a is multiplicative.
template <Coefficient T>
BellDecomposition<T> bell_decompose_mult(const ArithFn<T>& a, const SpfSieve& sieve,
                                         double tol = kDefaultCheckTolerance);

/// a(prod p^alpha) = prod c_{p, alpha}. Every series needs c_0 = 1 and the
/// full length floor(log_p N) + 1 (kInvariant otherwise).
template <Coefficient T>
ArithFn<T> bell_reconstruct_mult(const BellDecomposition<T>& d, const SpfSieve& sieve);

/// g(p, k) = a(p^k) - a(p^{k-1}). Throws kStructure unless a is additive.
template <Coefficient T>
PrimeSupport<T> additive_decompose(const ArithFn<T>& a, const SpfSieve& sieve,
                                   double tol = kDefaultCheckTolerance);

/// a(n) = sum over prime powers p^k | n of g(p, k), i.e. u * g.
template <Coefficient T>
ArithFn<T> additive_reconstruct(const PrimeSupport<T>& g, std::int64_t bound,
                                const SpfSieve& sieve);

/// Per-prime series of an additive decomposition: c_0 = 0, c_k = g(p, k).
template <Coefficient T>
BellDecomposition<T> to_bell(const PrimeSupport<T>& g, const SpfSieve& sieve);

/// Dense function equal to g on prime powers and 0 elsewhere.
template <Coefficient T>
ArithFn<T> extend_by_zero(const PrimeSupport<T>& g);

// One-variable truncated power series, used to expand Bell series. All
// results keep the length of their inputs.
namespace series {

template <Coefficient T>
std::vector<T> multiply(const std::vector<T>& f, const std::vector<T>& g);

/// sum_k c^k x^k = 1 / (1 - c x).
template <Coefficient T>
std::vector<T> geometric(const T& c, std::size_t length);

/// log f for f(0) = 1: sum_{k>=1} (-1)^{k-1} (f - 1)^k / k.
template <Coefficient T>
std::vector<T> log(const std::vector<T>& f);

/// exp f for f(0) = 0: 1 + sum_{k>=1} f^k / k!.
template <Coefficient T>
std::vector<T> exp(const std::vector<T>& f);

}  // namespace series

void require_sieve_covers(const SpfSieve& sieve, std::int64_t bound);

}  // namespace arith
