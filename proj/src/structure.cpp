#include "arith/structure.hpp"

#include <numeric>

#include "arith/dirichlet.hpp"

namespace arith {

std::string Witness::str() const {
  switch (kind) {
    case Kind::kNone: return "";
    case Kind::kPair: return "(" + std::to_string(first) + ", " + std::to_string(second) + ")";
    case Kind::kPrimePower: return "p=" + std::to_string(first) + ", k=" + std::to_string(second);
    case Kind::kIndex: return "n=" + std::to_string(first);
  }
  return "";
}

void require_sieve_covers(const SpfSieve& sieve, std::int64_t bound) {
  if (sieve.bound() < bound) {
    throw Error(ErrorKind::kRange, "sieve bound " + std::to_string(sieve.bound()) +
                                       " below function bound " + std::to_string(bound));
  }
}

namespace {

template <Coefficient T>
bool same(const T& a, const T& b, double tol) {
  return CoefficientTraits<T>::equal(a, b, tol);
}

template <Coefficient T>
StructureCheck<T> fail(Witness w) {
  StructureCheck<T> out;
  out.holds = false;
  out.witness = w;
  return out;
}

// Scans coprime pairs 2 <= m < n, mn <= N in lexicographic order.
template <Coefficient T, class Combine>
StructureCheck<T> scan_coprime_pairs(const ArithFn<T>& a, double tol, Combine combine) {
  const std::int64_t bound = a.bound();
  for (std::int64_t m = 2; m * (m + 1) <= bound; ++m) {
    for (std::int64_t n = m + 1; m * n <= bound; ++n) {
      if (std::gcd(m, n) != 1) continue;
      if (!same(a[m * n], combine(a[m], a[n]), tol)) return fail<T>(Witness::pair(m, n));
    }
  }
  return {};
}

template <Coefficient T>
std::vector<T> prime_values(const ArithFn<T>& a, const SpfSieve& sieve) {
  std::vector<T> out;
  for (std::int64_t p : sieve.primes()) {
    if (p > a.bound()) break;
    out.push_back(a[p]);
  }
  return out;
}

}  // namespace

template <Coefficient T>
StructureCheck<T> is_multiplicative(const ArithFn<T>& a, double tol) {
  // Pairs first so the witness names a real counterexample; (1, 1) only when
  // the head alone is wrong.
  auto out = scan_coprime_pairs(a, tol, [](const T& x, const T& y) { return x * y; });
  if (out.holds && !same(a[1], T(1L), tol)) return fail<T>(Witness::pair(1, 1));
  return out;
}

template <Coefficient T>
StructureCheck<T> is_additive(const ArithFn<T>& a, double tol) {
  auto out = scan_coprime_pairs(a, tol, [](const T& x, const T& y) { return x + y; });
  if (out.holds && !same(a[1], T(), tol)) return fail<T>(Witness::pair(1, 1));
  return out;
}

template <Coefficient T>
StructureCheck<T> is_completely_multiplicative(const ArithFn<T>& a, const SpfSieve& sieve,
                                               double tol) {
  require_sieve_covers(sieve, a.bound());
  StructureCheck<T> result = is_multiplicative(a, tol);
  if (!result) return result;
  for (std::int64_t p : sieve.primes()) {
    if (p * p > a.bound()) break;
    T expected = a[p];
    std::int64_t k = 2;
    for (std::int64_t pk = p * p; pk <= a.bound(); pk *= p, ++k) {
      expected *= a[p];
      if (!same(a[pk], expected, tol)) return fail<T>(Witness::prime_power(p, k));
      if (pk > a.bound() / p) break;
    }
  }
  result.constants = prime_values(a, sieve);
  return result;
}

template <Coefficient T>
StructureCheck<T> is_completely_additive(const ArithFn<T>& a, const SpfSieve& sieve,
                                         double tol) {
  require_sieve_covers(sieve, a.bound());
  StructureCheck<T> result = is_additive(a, tol);
  if (!result) return result;
  for (std::int64_t p : sieve.primes()) {
    if (p * p > a.bound()) break;
    std::int64_t k = 2;
    for (std::int64_t pk = p * p; pk <= a.bound(); pk *= p, ++k) {
      if (!same(a[pk], T(static_cast<long>(k)) * a[p], tol)) {
        return fail<T>(Witness::prime_power(p, k));
      }
      if (pk > a.bound() / p) break;
    }
  }
  result.constants = prime_values(a, sieve);
  return result;
}

template <Coefficient T>
StructureCheck<T> mobius_additivity_test(const ArithFn<T>& a, const SpfSieve& sieve,
                                         double tol) {
  require_sieve_covers(sieve, a.bound());
  const ArithFn<T> mu = dirichlet_inv(ArithFn<T>::constant(a.bound(), T(1L)));
  const ArithFn<T> g = dirichlet_mul(mu, a);
  for (std::int64_t n = 1; n <= a.bound(); ++n) {
    const bool prime_power = n >= 2 && sieve.prime_power_part(n).has_value();
    if (prime_power) continue;
    if (!same(g[n], T(), tol)) return fail<T>(Witness::index(n));
  }
  return {};
}

template <Coefficient T>
BellSeries<T> bell_series(const ArithFn<T>& a, std::int64_t prime, const SpfSieve& sieve) {
  require_sieve_covers(sieve, a.bound());
  if (!sieve.is_prime(prime) || prime > a.bound()) {
    throw Error(ErrorKind::kRange,
                std::to_string(prime) + " is not a prime <= " + std::to_string(a.bound()));
  }
  BellSeries<T> out{prime, {a[1]}};
  for (std::int64_t pk = prime;; pk *= prime) {
    out.coeffs.push_back(a[pk]);
    if (pk > a.bound() / prime) break;
  }
  return out;
}

template <Coefficient T>
BellDecomposition<T> bell_decompose_mult(const ArithFn<T>& a, const SpfSieve& sieve,
                                         double tol) {
  const StructureCheck<T> check = is_multiplicative(a, tol);
  if (!check) {
    throw Error(ErrorKind::kStructure,
                "not multiplicative, witness " + check.witness.str());
  }
  BellDecomposition<T> out{a.bound(), BellKind::kMultiplicative, {}};
  for (std::int64_t p : sieve.primes()) {
    if (p > a.bound()) break;
    out.series.push_back(bell_series(a, p, sieve));
  }
  return out;
}

namespace {

// Validates series shape and returns, for each prime index, its coefficients.
template <Coefficient T>
std::vector<const std::vector<T>*> index_series(const BellDecomposition<T>& d,
                                                const SpfSieve& sieve, const T& head) {
  require_sieve_covers(sieve, d.bound);
  std::vector<const std::vector<T>*> by_index;
  for (std::int64_t p : sieve.primes()) {
    if (p > d.bound) break;
    by_index.push_back(nullptr);
  }
  for (const BellSeries<T>& s : d.series) {
    const auto idx = sieve.prime_index(s.prime);
    if (!idx || s.prime > d.bound) {
      throw Error(ErrorKind::kInvariant, "series key " + std::to_string(s.prime) +
                                             " is not a prime <= " + std::to_string(d.bound));
    }
    const std::size_t expected = static_cast<std::size_t>(floor_log(s.prime, d.bound)) + 1;
    if (s.coeffs.size() != expected) {
      throw Error(ErrorKind::kInvariant, "series at prime " + std::to_string(s.prime) +
                                             " has " + std::to_string(s.coeffs.size()) +
                                             " coefficients, expected " +
                                             std::to_string(expected));
    }
    bool head_ok;
    if constexpr (CoefficientTraits<T>::kExact) {
      head_ok = s.coeffs[0] == head;
    } else {
      head_ok = CoefficientTraits<T>::negligible(s.coeffs[0] - head, kDefaultEpsilon);
    }
    if (!head_ok) {
      throw Error(ErrorKind::kInvariant, "series at prime " + std::to_string(s.prime) +
                                             " has constant term " + s.coeffs[0].str() +
                                             ", expected " + head.str());
    }
    by_index[*idx - 1] = &s.coeffs;
  }
  for (std::size_t i = 0; i < by_index.size(); ++i) {
    if (by_index[i] == nullptr) {
      throw Error(ErrorKind::kInvariant,
                  "missing series for prime " + std::to_string(sieve.primes()[i]));
    }
  }
  return by_index;
}

// Splits n >= 2 as p^alpha * rest with p = spf(n).
struct Split {
  std::int64_t prime;
  int exponent;
  std::int64_t rest;
};

Split split_spf(const SpfSieve& sieve, std::int64_t n) {
  const std::int64_t p = sieve.spf(n);
  int alpha = 0;
  while (n % p == 0) {
    n /= p;
    ++alpha;
  }
  return {p, alpha, n};
}

}  // namespace

template <Coefficient T>
ArithFn<T> bell_reconstruct_mult(const BellDecomposition<T>& d, const SpfSieve& sieve) {
  if (d.kind != BellKind::kMultiplicative) {
    throw Error(ErrorKind::kInvariant, "decomposition is not multiplicative");
  }
  const auto by_index = index_series(d, sieve, T(1L));
  ArithFn<T> out(d.bound);
  out[1] = T(1L);
  for (std::int64_t n = 2; n <= d.bound; ++n) {
    const Split s = split_spf(sieve, n);
    const auto& coeffs = *by_index[*sieve.prime_index(s.prime) - 1];
    out[n] = out[s.rest] * coeffs[static_cast<std::size_t>(s.exponent)];
  }
  return out;
}

template <Coefficient T>
PrimeSupport<T> additive_decompose(const ArithFn<T>& a, const SpfSieve& sieve, double tol) {
  require_sieve_covers(sieve, a.bound());
  const StructureCheck<T> check = is_additive(a, tol);
  if (!check) {
    throw Error(ErrorKind::kStructure, "not additive, witness " + check.witness.str());
  }
  PrimeSupport<T> out{a.bound(), {}};
  for (std::int64_t p : sieve.primes()) {
    if (p > a.bound()) break;
    std::int64_t prev = 1;
    int k = 1;
    for (std::int64_t pk = p;; pk *= p, ++k) {
      T value = a[pk] - a[prev];
      if (!CoefficientTraits<T>::negligible(value, kDefaultEpsilon)) {
        out.values.emplace(std::make_pair(p, k), std::move(value));
      }
      prev = pk;
      if (pk > a.bound() / p) break;
    }
  }
  return out;
}

namespace {

template <Coefficient T>
void validate_keys(const PrimeSupport<T>& g, std::int64_t bound, const SpfSieve& sieve) {
  require_sieve_covers(sieve, bound);
  for (const auto& [key, value] : g.values) {
    const auto [p, k] = key;
    bool ok = k >= 1 && sieve.is_prime(p) && k <= floor_log(p, bound);
    if (!ok) {
      throw Error(ErrorKind::kInvariant, "key (" + std::to_string(p) + ", " +
                                             std::to_string(k) + ") is not a prime power <= " +
                                             std::to_string(bound));
    }
  }
}

}  // namespace

template <Coefficient T>
ArithFn<T> additive_reconstruct(const PrimeSupport<T>& g, std::int64_t bound,
                                const SpfSieve& sieve) {
  if (bound < 1) throw Error(ErrorKind::kInvalidBound, "bound must be >= 1");
  validate_keys(g, bound, sieve);
  // cumulative[p^k] = g(p,1) + ... + g(p,k), the value at p^k.
  ArithFn<T> cumulative(bound);
  for (std::int64_t p : sieve.primes()) {
    if (p > bound) break;
    T running;
    int k = 1;
    for (std::int64_t pk = p;; pk *= p, ++k) {
      if (auto it = g.values.find({p, k}); it != g.values.end()) running += it->second;
      cumulative[pk] = running;
      if (pk > bound / p) break;
    }
  }
  ArithFn<T> out(bound);
  for (std::int64_t n = 2; n <= bound; ++n) {
    const Split s = split_spf(sieve, n);
    out[n] = out[s.rest] + cumulative[n / s.rest];
  }
  return out;
}

template <Coefficient T>
BellDecomposition<T> to_bell(const PrimeSupport<T>& g, const SpfSieve& sieve) {
  validate_keys(g, g.bound, sieve);
  BellDecomposition<T> out{g.bound, BellKind::kAdditive, {}};
  for (std::int64_t p : sieve.primes()) {
    if (p > g.bound) break;
    BellSeries<T> s{p, std::vector<T>(static_cast<std::size_t>(floor_log(p, g.bound)) + 1)};
    for (std::size_t k = 1; k < s.coeffs.size(); ++k) {
      if (auto it = g.values.find({p, static_cast<int>(k)}); it != g.values.end()) {
        s.coeffs[k] = it->second;
      }
    }
    out.series.push_back(std::move(s));
  }
  return out;
}

template <Coefficient T>
ArithFn<T> extend_by_zero(const PrimeSupport<T>& g) {
  ArithFn<T> out(g.bound);
  for (const auto& [key, value] : g.values) {
    std::int64_t pk = 1;
    for (int i = 0; i < key.second; ++i) pk *= key.first;
    if (pk > g.bound) {
      throw Error(ErrorKind::kInvariant, "prime power beyond bound");
    }
    out[pk] = value;
  }
  return out;
}

namespace series {

template <Coefficient T>
std::vector<T> multiply(const std::vector<T>& f, const std::vector<T>& g) {
  const std::size_t len = std::min(f.size(), g.size());
  std::vector<T> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len; ++j) out[i + j].add_product(f[i], g[j]);
  }
  return out;
}

template <Coefficient T>
std::vector<T> geometric(const T& c, std::size_t length) {
  std::vector<T> out(length);
  T power(1L);
  for (std::size_t k = 0; k < length; ++k) {
    out[k] = power;
    power *= c;
  }
  return out;
}

template <Coefficient T>
std::vector<T> log(const std::vector<T>& f) {
  if (f.empty()) return {};
  if (!CoefficientTraits<T>::equal(f[0], T(1L), kDefaultEpsilon)) {
    throw Error(ErrorKind::kDomain, "series log requires constant term 1, got " + f[0].str());
  }
  std::vector<T> b = f;
  b[0] = T();
  std::vector<T> out(f.size());
  std::vector<T> power = b;
  // b^k vanishes below degree k, so terms past length - 1 contribute nothing.
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (k > 1) power = multiply(power, b);
    const T coeff = CoefficientTraits<T>::from_ratio(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    for (std::size_t i = 0; i < out.size(); ++i) out[i].add_product(coeff, power[i]);
  }
  return out;
}

template <Coefficient T>
std::vector<T> exp(const std::vector<T>& f) {
  if (f.empty()) return {};
  if (!CoefficientTraits<T>::equal(f[0], T(), kDefaultEpsilon)) {
    throw Error(ErrorKind::kDomain, "series exp requires constant term 0, got " + f[0].str());
  }
  std::vector<T> out(f.size());
  out[0] = T(1L);
  std::vector<T> power = f;
  T inv_factorial(1L);
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (k > 1) power = multiply(power, f);
    inv_factorial = inv_factorial / T(static_cast<long>(k));
    for (std::size_t i = 0; i < out.size(); ++i) out[i].add_product(inv_factorial, power[i]);
  }
  return out;
}

}  // namespace series

#define ARITH_INSTANTIATE(T)                                                                 \
  template StructureCheck<T> is_multiplicative(const ArithFn<T>&, double);                   \
  template StructureCheck<T> is_completely_multiplicative(const ArithFn<T>&, const SpfSieve&, \
                                                          double);                           \
  template StructureCheck<T> is_additive(const ArithFn<T>&, double);                         \
  template StructureCheck<T> is_completely_additive(const ArithFn<T>&, const SpfSieve&,       \
                                                    double);                                 \
  template StructureCheck<T> mobius_additivity_test(const ArithFn<T>&, const SpfSieve&,       \
                                                    double);                                 \
  template BellSeries<T> bell_series(const ArithFn<T>&, std::int64_t, const SpfSieve&);      \
  template BellDecomposition<T> bell_decompose_mult(const ArithFn<T>&, const SpfSieve&,       \
                                                    double);                                 \
  template ArithFn<T> bell_reconstruct_mult(const BellDecomposition<T>&, const SpfSieve&);   \
  template PrimeSupport<T> additive_decompose(const ArithFn<T>&, const SpfSieve&, double);   \
  template ArithFn<T> additive_reconstruct(const PrimeSupport<T>&, std::int64_t,             \
                                           const SpfSieve&);                                 \
  template BellDecomposition<T> to_bell(const PrimeSupport<T>&, const SpfSieve&);            \
  template ArithFn<T> extend_by_zero(const PrimeSupport<T>&);                                \
  template std::vector<T> series::multiply(const std::vector<T>&, const std::vector<T>&);    \
  template std::vector<T> series::geometric(const T&, std::size_t);                          \
  template std::vector<T> series::log(const std::vector<T>&);                                \
  template std::vector<T> series::exp(const std::vector<T>&);

ARITH_INSTANTIATE(Rational)
ARITH_INSTANTIATE(Complex)

#undef ARITH_INSTANTIATE

}  // namespace arith
