#include "arith/transcend.hpp"

#include <bit>
#include <string>

#include "arith/dirichlet.hpp"

namespace arith {

int series_terms(std::int64_t bound) {
  if (bound < 1) throw Error(ErrorKind::kInvalidBound, "bound must be >= 1");
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(bound))) - 1;
}

namespace {

template <Coefficient T>
void require_head(const ArithFn<T>& a, long expected, double eps, const char* op) {
  const T target(expected);
  bool ok;
  if constexpr (CoefficientTraits<T>::kExact) {
    ok = a[1] == target;
  } else {
    ok = CoefficientTraits<T>::negligible(a[1] - target, eps);
  }
  if (!ok) {
    throw Error(ErrorKind::kDomain, std::string(op) + " requires a(1) = " +
                                        std::to_string(expected) + ", got " + a[1].str());
  }
}

template <Coefficient T>
ArithFn<T> mobius(std::int64_t bound) {
  return dirichlet_inv(ArithFn<T>::constant(bound, T(1L)));
}

}  // namespace

template <Coefficient T>
ArithFn<T> dlog_series(const ArithFn<T>& a, int terms, double eps) {
  require_head(a, 1, eps, "log");
  ArithFn<T> b = a;
  b[1] = T();
  ArithFn<T> result(a.bound());
  ArithFn<T> power = b;
  for (int k = 1; k <= terms; ++k) {
    if (k > 1) power = dirichlet_mul(power, b);
    const T coeff = CoefficientTraits<T>::from_ratio(k % 2 == 1 ? 1 : -1, k);
    for (std::int64_t n = 1; n <= a.bound(); ++n) {
      if (!power[n].is_zero()) result[n].add_product(coeff, power[n]);
    }
  }
  return result;
}

template <Coefficient T>
ArithFn<T> dexp_series(const ArithFn<T>& a, int terms, double eps) {
  require_head(a, 0, eps, "exp");
  ArithFn<T> b = a;
  b[1] = T();
  ArithFn<T> result = ArithFn<T>::identity(a.bound());
  ArithFn<T> power = b;
  T inv_factorial(1L);
  for (int k = 1; k <= terms; ++k) {
    if (k > 1) power = dirichlet_mul(power, b);
    inv_factorial = inv_factorial / T(static_cast<long>(k));
    for (std::int64_t n = 1; n <= a.bound(); ++n) {
      if (!power[n].is_zero()) result[n].add_product(inv_factorial, power[n]);
    }
  }
  return result;
}

template <Coefficient T>
ArithFn<T> psi(const ArithFn<T>& a, double eps) {
  return dirichlet_mul(ArithFn<T>::constant(a.bound(), T(1L)), dlog(a, eps));
}

template <Coefficient T>
ArithFn<T> psi_inv(const ArithFn<T>& a, double eps) {
  require_head(a, 0, eps, "psiinv");
  return dexp(dirichlet_mul(mobius<T>(a.bound()), a), eps);
}

template <Coefficient T>
ArithFn<T> normalize_unit(const ArithFn<T>& a, double eps) {
  if (CoefficientTraits<T>::negligible(a[1], eps)) {
    throw Error(ErrorKind::kDomain, "cannot normalize: a(1) = " + a[1].str());
  }
  return scalar_mul(a[1].inverse(), a);
}

#define ARITH_INSTANTIATE(T)                                        \
  template ArithFn<T> dlog_series(const ArithFn<T>&, int, double);  \
  template ArithFn<T> dexp_series(const ArithFn<T>&, int, double);  \
  template ArithFn<T> psi(const ArithFn<T>&, double);               \
  template ArithFn<T> psi_inv(const ArithFn<T>&, double);           \
  template ArithFn<T> normalize_unit(const ArithFn<T>&, double);

ARITH_INSTANTIATE(Rational)
ARITH_INSTANTIATE(Complex)

#undef ARITH_INSTANTIATE

}  // namespace arith
