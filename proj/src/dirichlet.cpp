#include "arith/dirichlet.hpp"

#include <cmath>
#include <string>

#include "arith/kernels.hpp"

namespace arith {

void check_same_bound(std::int64_t lhs, std::int64_t rhs, const char* op) {
  if (lhs != rhs) {
    throw Error(ErrorKind::kShape, std::string(op) + ": bound mismatch " + std::to_string(lhs) +
                                       " vs " + std::to_string(rhs));
  }
}

template <Coefficient T>
ArithFn<T> point_add(const ArithFn<T>& a, const ArithFn<T>& b) {
  check_same_bound(a.bound(), b.bound(), "point_add");
  ArithFn<T> out = a;
  for (std::int64_t n = 1; n <= a.bound(); ++n) out[n] += b[n];
  return out;
}

template <Coefficient T>
ArithFn<T> point_sub(const ArithFn<T>& a, const ArithFn<T>& b) {
  check_same_bound(a.bound(), b.bound(), "point_sub");
  ArithFn<T> out = a;
  for (std::int64_t n = 1; n <= a.bound(); ++n) out[n] -= b[n];
  return out;
}

template <Coefficient T>
ArithFn<T> scalar_mul(const T& r, const ArithFn<T>& a) {
  ArithFn<T> out = a;
  for (auto& v : out.values()) v *= r;
  return out;
}

template <Coefficient T>
ArithFn<T> dirichlet_mul(const ArithFn<T>& a, const ArithFn<T>& b) {
  check_same_bound(a.bound(), b.bound(), "dirichlet_mul");
  ArithFn<T> out(a.bound());
  if (a.bound() >= kernels::kParallelThreshold && kernels::max_threads() > 1) {
    kernels::convolve_parallel<T>(a.values(), b.values(), out.values());
  } else {
    kernels::convolve_serial<T>(a.values(), b.values(), out.values());
  }
  return out;
}

template <Coefficient T>
ArithFn<T> dirichlet_inv(const ArithFn<T>& a, double eps) {
  if (CoefficientTraits<T>::negligible(a[1], eps)) {
    throw Error(ErrorKind::kNonInvertible,
                "not invertible: value at index 1 is " + a[1].str());
  }
  const std::int64_t bound = a.bound();
  const T inv_head = a[1].inverse();
  // acc[m] collects sum_{d | m, d < m} b(d) a(m/d), d ascending: b(d) is
  // final when the sweep reaches d, and is then pushed to its multiples.
  ArithFn<T> acc(bound);
  ArithFn<T> out(bound);
  for (std::int64_t d = 1; d <= bound; ++d) {
    out[d] = d == 1 ? inv_head : -(acc[d] * inv_head);
    const T& bd = out[d];
    if (bd.is_zero()) continue;
    for (std::int64_t q = 2, m = 2 * d; m <= bound; ++q, m += d) {
      if (a[q].is_zero()) continue;
      acc[m].add_product(bd, a[q]);
    }
  }
  return out;
}

template <Coefficient T>
ArithFn<T> dirichlet_pow(const ArithFn<T>& a, std::uint64_t k) {
  ArithFn<T> result = ArithFn<T>::identity(a.bound());
  ArithFn<T> base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : dirichlet_mul(result, base);
      first = false;
    }
    k >>= 1;
    if (k > 0) base = dirichlet_mul(base, base);
  }
  return result;
}

template <Coefficient T>
ArithFn<T> dirichlet_pow_iterated(const ArithFn<T>& a, std::uint64_t k) {
  if (k == 0) return ArithFn<T>::identity(a.bound());
  ArithFn<T> result = a;
  for (std::uint64_t i = 1; i < k; ++i) result = dirichlet_mul(result, a);
  return result;
}

template <Coefficient T>
ArithFn<T> derivative(const ArithFn<T>& a) {
  if constexpr (CoefficientTraits<T>::kExact) {
    throw Error(ErrorKind::kUnsupportedBackend,
                "derivative needs the complex backend (ln n is irrational)");
  } else {
    ArithFn<T> out(a.bound());
    for (std::int64_t n = 2; n <= a.bound(); ++n) {
      out[n] = a[n] * T(std::log(static_cast<double>(n)));
    }
    return out;
  }
}

template <Coefficient T>
std::optional<std::int64_t> valuation(const ArithFn<T>& a, double eps) {
  for (std::int64_t n = 1; n <= a.bound(); ++n) {
    if (!CoefficientTraits<T>::negligible(a[n], eps)) return n;
  }
  return std::nullopt;
}

template <Coefficient T>
std::vector<std::int64_t> support(const ArithFn<T>& a, double eps) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= a.bound(); ++n) {
    if (!CoefficientTraits<T>::negligible(a[n], eps)) out.push_back(n);
  }
  return out;
}

#define ARITH_INSTANTIATE(T)                                                   \
  template ArithFn<T> point_add(const ArithFn<T>&, const ArithFn<T>&);         \
  template ArithFn<T> point_sub(const ArithFn<T>&, const ArithFn<T>&);         \
  template ArithFn<T> scalar_mul(const T&, const ArithFn<T>&);                 \
  template ArithFn<T> dirichlet_mul(const ArithFn<T>&, const ArithFn<T>&);     \
  template ArithFn<T> dirichlet_inv(const ArithFn<T>&, double);                \
  template ArithFn<T> dirichlet_pow(const ArithFn<T>&, std::uint64_t);         \
  template ArithFn<T> dirichlet_pow_iterated(const ArithFn<T>&, std::uint64_t); \
  template ArithFn<T> derivative(const ArithFn<T>&);                           \
  template std::optional<std::int64_t> valuation(const ArithFn<T>&, double);   \
  template std::vector<std::int64_t> support(const ArithFn<T>&, double);

ARITH_INSTANTIATE(Rational)
ARITH_INSTANTIATE(Complex)

#undef ARITH_INSTANTIATE

}  // namespace arith
