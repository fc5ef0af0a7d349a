#include "arith/sieve.hpp"

#include <algorithm>
#include <string>

#include "arith/error.hpp"

namespace arith {

SpfSieve::SpfSieve(std::int64_t bound) : bound_(bound) {
  if (bound < 1 || bound > kMaxBound) {
    throw Error(ErrorKind::kInvalidBound,
                "sieve bound must be in 1.." + std::to_string(kMaxBound) + ", got " +
                    std::to_string(bound));
  }
  spf_.assign(static_cast<std::size_t>(bound) + 1, 0);
  // Linear sieve: each composite is crossed off exactly once, by its spf.
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(i);
    }
    const std::int64_t limit = spf_[i];
    for (std::int64_t p : primes_) {
      if (p > limit || i * p > bound) break;
      spf_[i * p] = static_cast<std::uint32_t>(p);
    }
  }
}

void SpfSieve::check_index(std::int64_t n, std::int64_t lo) const {
  if (n < lo || n > bound_) {
    throw Error(ErrorKind::kRange, "index " + std::to_string(n) + " outside " +
                                       std::to_string(lo) + ".." + std::to_string(bound_));
  }
}

std::int64_t SpfSieve::spf(std::int64_t n) const {
  check_index(n, 2);
  return spf_[n];
}

bool SpfSieve::is_prime(std::int64_t n) const {
  return n >= 2 && n <= bound_ && spf_[n] == n;
}

std::optional<std::size_t> SpfSieve::prime_index(std::int64_t p) const {
  if (!is_prime(p)) return std::nullopt;
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

Factorization SpfSieve::factorize(std::int64_t n) const {
  check_index(n, 1);
  Factorization out;
  while (n > 1) {
    const std::int64_t p = spf_[n];
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  return out;
}

std::vector<std::int64_t> SpfSieve::divisors(std::int64_t n) const {
  const Factorization f = factorize(n);
  std::vector<std::int64_t> out{1};
  for (const auto& [p, k] : f) {
    const std::size_t prev = out.size();
    std::int64_t pk = 1;
    for (int e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PrimePower> SpfSieve::prime_power_part(std::int64_t n) const {
  check_index(n, 2);
  const std::int64_t p = spf_[n];
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

int SpfSieve::nu_count(std::int64_t n) const {
  check_index(n, 1);
  int count = 0;
  while (n > 1) {
    const std::int64_t p = spf_[n];
    while (n % p == 0) n /= p;
    ++count;
  }
  return count;
}

int SpfSieve::omega_count(std::int64_t n) const {
  check_index(n, 1);
  int count = 0;
  while (n > 1) {
    n /= spf_[n];
    ++count;
  }
  return count;
}

int floor_log(std::int64_t p, std::int64_t n) {
  int k = 0;
  for (std::int64_t power = p; power <= n; power *= p) {
    ++k;
    if (power > n / p) break;
  }
  return k;
}

}  // namespace arith
