#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arith/error.hpp"
#include "arith/numerics.hpp"

namespace arith {

/// An arithmetical function restricted to 1..N: the coefficient of [x]^n is
/// value(n). Every ring operation at index n only reads divisors of n, so all
/// results are exact on 1..N.
template <Coefficient T>
class ArithFn {
 public:
  using value_type = T;

  /// Zero function on 1..bound.
  explicit ArithFn(std::int64_t bound) {
    if (bound < 1) {
      throw Error(ErrorKind::kInvalidBound, "bound must be >= 1, got " + std::to_string(bound));
    }
    values_.resize(static_cast<std::size_t>(bound));
  }

  /// values[0] is the value at n = 1.
  explicit ArithFn(std::vector<T> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(ErrorKind::kInvalidBound, "bound must be >= 1, got 0");
  }

  template <class F>
  static ArithFn tabulate(std::int64_t bound, F&& f) {
    ArithFn out(bound);
    for (std::int64_t n = 1; n <= bound; ++n) out[n] = f(n);
    return out;
  }

  static ArithFn zero(std::int64_t bound) { return ArithFn(bound); }

  /// Dirichlet identity: 1 at n = 1, 0 elsewhere.
  static ArithFn identity(std::int64_t bound) {
    ArithFn out(bound);
    out[1] = T(1L);
    return out;
  }

  static ArithFn constant(std::int64_t bound, const T& value) {
    ArithFn out(bound);
    for (auto& v : out.values_) v = value;
    return out;
  }

  std::int64_t bound() const { return static_cast<std::int64_t>(values_.size()); }

  // 1-based, unchecked.
  const T& operator[](std::int64_t n) const { return values_[static_cast<std::size_t>(n - 1)]; }
  T& operator[](std::int64_t n) { return values_[static_cast<std::size_t>(n - 1)]; }

  const T& at(std::int64_t n) const {
    if (n < 1 || n > bound()) {
      throw Error(ErrorKind::kRange, "index " + std::to_string(n) + " outside 1.." +
                                         std::to_string(bound()));
    }
    return (*this)[n];
  }

  std::span<const T> values() const { return values_; }
  std::span<T> values() { return values_; }

  /// Restriction to 1..m, m <= bound.
  ArithFn restrict_to(std::int64_t m) const {
    if (m < 1 || m > bound()) {
      throw Error(ErrorKind::kRange, "cannot restrict bound " + std::to_string(bound()) +
                                         " to " + std::to_string(m));
    }
    return ArithFn(std::vector<T>(values_.begin(), values_.begin() + m));
  }

  friend bool operator==(const ArithFn& a, const ArithFn& b)
    requires CoefficientTraits<T>::kExact
  {
    return a.values_ == b.values_;
  }

 private:
  std::vector<T> values_;
};

/// Equal bounds and every value equal (exact) or within tol (float).
template <Coefficient T>
bool equal(const ArithFn<T>& a, const ArithFn<T>& b, double tol) {
  if (a.bound() != b.bound()) return false;
  for (std::int64_t n = 1; n <= a.bound(); ++n) {
    if (!CoefficientTraits<T>::equal(a[n], b[n], tol)) return false;
  }
  return true;
}

/// Least n where a and b differ beyond tol, or 0 when they agree.
template <Coefficient T>
std::int64_t first_difference(const ArithFn<T>& a, const ArithFn<T>& b, double tol) {
  if (a.bound() != b.bound()) {
    throw Error(ErrorKind::kShape, "bound mismatch: " + std::to_string(a.bound()) + " vs " +
                                       std::to_string(b.bound()));
  }
  for (std::int64_t n = 1; n <= a.bound(); ++n) {
    if (!CoefficientTraits<T>::equal(a[n], b[n], tol)) return n;
  }
  return 0;
}

inline ArithFn<Complex> to_complex(const ArithFn<Rational>& a) {
  ArithFn<Complex> out(a.bound());
  for (std::int64_t n = 1; n <= a.bound(); ++n) out[n] = to_complex(a[n]);
  return out;
}

using RationalFn = ArithFn<Rational>;
using ComplexFn = ArithFn<Complex>;

}  // namespace arith
