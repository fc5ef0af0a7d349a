#pragma once

// Formal log: (I + M) -> M and exp: M -> (I + M), where M = {a : a(1) = 0},
// and the group isomorphism psi(a) = u * log(a) with inverse exp(mu * a).
//
// If b(1) = 0 then b^{*k}(n) = 0 whenever k > Omega(n), and Omega(n) <= log2 n,
// so the series truncated after floor(log2 N) terms are exact on 1..N.

#include <cstdint>

#include "arith/arith_fn.hpp"

namespace arith {

/// floor(log2 N): number of series terms that are exact at bound N.
int series_terms(std::int64_t bound);

/// sum_{k=1}^{terms} (-1)^{k-1} (a - I)^{*k} / k. Requires a(1) = 1
/// (float: within eps, then treated as exactly 1).
template <Coefficient T>
ArithFn<T> dlog_series(const ArithFn<T>& a, int terms, double eps = kDefaultEpsilon);

/// I + sum_{k=1}^{terms} a^{*k} / k!. Requires a(1) = 0 (float: within eps).
template <Coefficient T>
ArithFn<T> dexp_series(const ArithFn<T>& a, int terms, double eps = kDefaultEpsilon);

template <Coefficient T>
ArithFn<T> dlog(const ArithFn<T>& a, double eps = kDefaultEpsilon) {
  return dlog_series(a, series_terms(a.bound()), eps);
}

template <Coefficient T>
ArithFn<T> dexp(const ArithFn<T>& a, double eps = kDefaultEpsilon) {
  return dexp_series(a, series_terms(a.bound()), eps);
}

/// u * dlog(a).
template <Coefficient T>
ArithFn<T> psi(const ArithFn<T>& a, double eps = kDefaultEpsilon);

/// dexp(mu * a).
template <Coefficient T>
ArithFn<T> psi_inv(const ArithFn<T>& a, double eps = kDefaultEpsilon);

/// Pointwise division by a(1). Off by default everywhere; the CLI exposes it
/// as --normalize-unit.
template <Coefficient T>
ArithFn<T> normalize_unit(const ArithFn<T>& a, double eps = kDefaultEpsilon);

}  // namespace arith
