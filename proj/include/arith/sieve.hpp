#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace arith {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Strictly increasing primes; empty iff n == 1.
using Factorization = std::vector<PrimePower>;

/// Smallest-prime-factor table up to a bound, plus the indexed prime list
/// p_1 = 2, p_2 = 3, ... . Immutable once built; queries are thread-safe.
class SpfSieve {
 public:
  // Memory is ~4 bytes per index; 2^30 is the supported ceiling.
  static constexpr std::int64_t kMaxBound = std::int64_t{1} << 30;

  explicit SpfSieve(std::int64_t bound);

  std::int64_t bound() const { return bound_; }
  std::span<const std::int64_t> primes() const { return primes_; }

  std::int64_t spf(std::int64_t n) const;
  bool is_prime(std::int64_t n) const;
  /// 1-based index i with p_i == p, or empty when p is not a prime <= bound.
  std::optional<std::size_t> prime_index(std::int64_t p) const;

  Factorization factorize(std::int64_t n) const;
  std::vector<std::int64_t> divisors(std::int64_t n) const;
  /// (p, k) with n == p^k, k >= 1. Requires n >= 2: 1 is not a prime power.
  std::optional<PrimePower> prime_power_part(std::int64_t n) const;
  int nu_count(std::int64_t n) const;
  int omega_count(std::int64_t n) const;

 private:
  void check_index(std::int64_t n, std::int64_t lo) const;

  std::int64_t bound_;
  std::vector<std::uint32_t> spf_;  // spf_[n]; spf_[0] = spf_[1] = 0
  std::vector<std::int64_t> primes_;
};

inline SpfSieve build_sieve(std::int64_t bound) { return SpfSieve(bound); }

/// floor(log_p n) for p >= 2, n >= 1, computed in integers.
int floor_log(std::int64_t p, std::int64_t n);

}  // namespace arith
