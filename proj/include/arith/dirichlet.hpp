#pragma once

// Ring operations on truncated arithmetical functions. All functions are pure
// and return fresh values; mismatched bounds are a kShape error.

#include <cstdint>
#include <optional>
#include <vector>

#include "arith/arith_fn.hpp"

namespace arith {

template <Coefficient T>
ArithFn<T> point_add(const ArithFn<T>& a, const ArithFn<T>& b);

template <Coefficient T>
ArithFn<T> point_sub(const ArithFn<T>& a, const ArithFn<T>& b);

template <Coefficient T>
ArithFn<T> scalar_mul(const T& r, const ArithFn<T>& a);

/// (a * b)(n) = sum_{d | n} a(d) b(n/d). Floats are summed with d ascending.
template <Coefficient T>
ArithFn<T> dirichlet_mul(const ArithFn<T>& a, const ArithFn<T>& b);

/// Dirichlet inverse. Requires a(1) != 0 (float: |a(1)| > eps); otherwise a
/// kNonInvertible error naming index 1.
template <Coefficient T>
ArithFn<T> dirichlet_inv(const ArithFn<T>& a, double eps = kDefaultEpsilon);

/// a^{*k} by repeated squaring; a^{*0} is the identity.
template <Coefficient T>
ArithFn<T> dirichlet_pow(const ArithFn<T>& a, std::uint64_t k);

/// a^{*k} as k - 1 successive products. Reference for dirichlet_pow.
template <Coefficient T>
ArithFn<T> dirichlet_pow_iterated(const ArithFn<T>& a, std::uint64_t k);

/// a'(n) = a(n) ln n. Only meaningful in the complex backend; the rational
/// instantiation throws kUnsupportedBackend.
template <Coefficient T>
ArithFn<T> derivative(const ArithFn<T>& a);

/// Least n with a(n) != 0; empty for the zero function.
template <Coefficient T>
std::optional<std::int64_t> valuation(const ArithFn<T>& a, double eps = kDefaultEpsilon);

template <Coefficient T>
std::vector<std::int64_t> support(const ArithFn<T>& a, double eps = kDefaultEpsilon);

void check_same_bound(std::int64_t lhs, std::int64_t rhs, const char* op);

}  // namespace arith
