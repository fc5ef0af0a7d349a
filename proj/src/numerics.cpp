#include "arith/numerics.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace arith {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivisionByZero: return "division by zero";
    case ErrorKind::kInvalidValue: return "invalid value";
    case ErrorKind::kInvalidBound: return "invalid bound";
    case ErrorKind::kRange: return "range error";
    case ErrorKind::kShape: return "shape error";
    case ErrorKind::kNonInvertible: return "non-invertible";
    case ErrorKind::kUnsupportedBackend: return "unsupported backend";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kStructure: return "structure error";
    case ErrorKind::kInvariant: return "invariant error";
    case ErrorKind::kFormat: return "format error";
    case ErrorKind::kParse: return "parse error";
  }
  return "error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::kFormat, "malformed number '" + std::string(text) + "'");
}

// Exact value of a decimal literal [sign] digits [. digits] [e [sign] digits].
mpq_class parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      bad_number(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class value = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
  value.canonicalize();
  return value;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::kDivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= den;
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) bad_number(text);
    mpz_class n(std::string(num_digits), 10);
    if (!num.empty() && num.front() == '-') n = -n;
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::kDivisionByZero, "rational with zero denominator");
    return Rational(mpq_class(n, d));
  }
  return Rational(parse_decimal(text));
}

Rational Rational::pow(const Rational& base, unsigned long exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  Rational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

void Rational::add_product(const Rational& x, const Rational& y) {
  // Thread-local scratch: mpq temporaries otherwise allocate on every call.
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), x.value_.get_mpq_t(), y.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

Rational rational(long num, long den) { return Rational(num, den); }

Complex::Complex(double re, double im) : value_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw Error(ErrorKind::kInvalidValue, "non-finite complex component");
  }
}

Complex Complex::from_ratio(long num, long den) {
  if (den == 0) throw Error(ErrorKind::kDivisionByZero, "ratio with zero denominator");
  return Complex(static_cast<double>(num) / static_cast<double>(den));
}

bool Complex::is_finite() const {
  return std::isfinite(value_.real()) && std::isfinite(value_.imag());
}

Complex Complex::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  Complex r;
  r.value_ = 1.0 / value_;
  return r;
}

Complex& Complex::operator/=(const Complex& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::kDivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(std::string_view text, std::string_view whole) {
  if (text.empty()) bad_number(whole);
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) bad_number(whole);
  return value;
}

}  // namespace

std::string Complex::str() const {
  std::string out = format_double(value_.real());
  if (value_.imag() != 0.0) {
    std::string im = format_double(value_.imag());
    if (im.front() != '-') out += '+';
    out += im;
    out += 'i';
  }
  return out;
}

Complex Complex::parse(std::string_view text) {
  if (text.empty()) bad_number(text);
  if (text.back() != 'i') {
    if (text.find('/') != std::string_view::npos) {
      return Complex(Rational::parse(text).to_double());
    }
    return Complex(parse_double(text, text));
  }
  // re(+|-)im i: split at the last sign that is not part of an exponent.
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return Complex(0.0, parse_double(body, text));
  return Complex(parse_double(body.substr(0, split), text),
                 parse_double(body.substr(split), text));
}

bool approx_eq(const Complex& a, const Complex& b, double tol) {
  if (!(tol > 0) || !std::isfinite(tol)) {
    throw Error(ErrorKind::kInvalidValue, "tolerance must be positive");
  }
  if (!a.is_finite() || !b.is_finite()) {
    throw Error(ErrorKind::kInvalidValue, "non-finite value in comparison");
  }
  return std::abs(a.raw() - b.raw()) <= tol;
}

}  // namespace arith
