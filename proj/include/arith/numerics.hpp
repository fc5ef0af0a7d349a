#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "arith/error.hpp"

namespace arith {

// Threshold below which a float coefficient counts as zero (support,
// valuation, invertibility of a(1)).
inline constexpr double kDefaultEpsilon = 1e-12;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  /// Parses "p", "p/q" or an exact decimal such as "-0.125" / "1e-3".
  static Rational parse(std::string_view text);

  static Rational pow(const Rational& base, unsigned long exponent);

  const mpq_class& raw() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  Rational inverse() const;

  /// "7", "-1/2", "0".
  std::string str() const { return value_.get_str(); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) {
    Rational r;
    r.value_ = -x.value_;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }

  // a += x * y without an intermediate heap temporary.
  void add_product(const Rational& x, const Rational& y);

 private:
  mpq_class value_;
};

/// rational(p, q): canonical p/q; throws kDivisionByZero when q == 0.
Rational rational(long num, long den);

/// Complex double with finite components. Construction from non-finite parts
/// throws; arithmetic results are not re-checked (approx_eq rejects them).
class Complex {
 public:
  Complex() = default;
  Complex(int value) : value_(static_cast<double>(value), 0.0) {}   // NOLINT
  Complex(long value) : value_(static_cast<double>(value), 0.0) {}  // NOLINT
  Complex(double re, double im = 0.0);
  explicit Complex(std::complex<double> value) : Complex(value.real(), value.imag()) {}

  static Complex from_ratio(long num, long den);
  static Complex parse(std::string_view text);

  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }
  const std::complex<double>& raw() const { return value_; }
  double abs() const { return std::abs(value_); }
  bool is_zero() const { return value_ == std::complex<double>(); }
  bool is_finite() const;

  Complex inverse() const;

  /// "1.5", "1.5+2i", "-3-0.25i" with 17 significant digits.
  std::string str() const;

  Complex& operator+=(const Complex& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Complex& operator-=(const Complex& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Complex& operator*=(const Complex& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Complex& operator/=(const Complex& rhs);

  friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
  friend Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
  friend Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
  friend Complex operator/(Complex lhs, const Complex& rhs) { return lhs /= rhs; }
  friend Complex operator-(const Complex& x) {
    Complex r;
    r.value_ = -x.value_;
    return r;
  }
  // Bitwise-exact comparison; used for determinism checks only. Tolerance
  // comparisons go through approx_eq.
  friend bool exactly_equal(const Complex& a, const Complex& b) {
    return a.value_ == b.value_;
  }

  void add_product(const Complex& x, const Complex& y) { value_ += x.value_ * y.value_; }

 private:
  std::complex<double> value_{};
};

/// |a - b| <= tol in complex modulus. Throws kInvalidValue for tol <= 0 or
/// non-finite inputs.
bool approx_eq(const Complex& a, const Complex& b, double tol);

template <class T>
concept Coefficient = requires(T a, const T& b, T& c) {
  { a + b } -> std::same_as<T>;
  { a - b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { a / b } -> std::same_as<T>;
  { -a } -> std::same_as<T>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.str() } -> std::convertible_to<std::string>;
  { b.inverse() } -> std::same_as<T>;
  c.add_product(b, b);
  T(1L);
};

template <Coefficient T>
struct CoefficientTraits;

template <>
struct CoefficientTraits<Rational> {
  static constexpr std::string_view kName = "rational";
  static constexpr bool kExact = true;

  static Rational from_ratio(long num, long den) { return rational(num, den); }
  static bool negligible(const Rational& x, double /*eps*/) { return x.is_zero(); }
  static bool equal(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
  static double distance(const Rational& a, const Rational& b) {
    return std::fabs((a - b).to_double());
  }
  static Rational parse(std::string_view text) { return Rational::parse(text); }
};

template <>
struct CoefficientTraits<Complex> {
  static constexpr std::string_view kName = "complex";
  static constexpr bool kExact = false;

  static Complex from_ratio(long num, long den) { return Complex::from_ratio(num, den); }
  static bool negligible(const Complex& x, double eps) { return x.abs() <= eps; }
  static bool equal(const Complex& a, const Complex& b, double tol) {
    return approx_eq(a, b, tol);
  }
  static double distance(const Complex& a, const Complex& b) { return (a - b).abs(); }
  static Complex parse(std::string_view text) { return Complex::parse(text); }
};

/// Exact-to-float widening used when rational data enters the complex backend.
inline Complex to_complex(const Rational& x) { return Complex(x.to_double()); }

}  // namespace arith
