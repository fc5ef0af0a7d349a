#pragma once

// Classical arithmetical functions built from their elementary definitions,
// and a check of their closed-form per-prime (Bell series) expressions.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith/arith_fn.hpp"
#include "arith/sieve.hpp"

namespace arith {

enum class CatalogueName {
  kIdentity,   // I
  kUnit,       // u
  kMobius,     // mu
  kPhi,        // Euler totient
  kMangoldt,   // Lambda (complex backend only)
  kLiouville,  // lambda
  kDivisors,   // d = sigma_0
  kSigma,      // sigma_c, takes an exponent
  kNatural,    // N(n) = n
  kNu,         // distinct prime factors
  kOmega,      // prime factors with multiplicity
};

/// Accepts the CLI spellings (I, u, mu, phi, lambda_liouville, Lambda, d,
/// sigma, N, nu, Omega) and the long aliases (mobius, mangoldt, liouville).
std::optional<CatalogueName> parse_catalogue_name(std::string_view text);

/// CLI spelling.
std::string_view catalogue_name(CatalogueName name);

/// Builds the named function on 1..bound. sigma_exponent is read only for
/// kSigma; the rational backend accepts integer exponents >= 0.
template <Coefficient T>
ArithFn<T> make(CatalogueName name, const SpfSieve& sieve, std::int64_t bound,
                double sigma_exponent = 0.0);

struct IdentityResult {
  std::string name;
  std::int64_t bound = 0;
  std::string backend;
  bool passed = false;
  std::int64_t first_failure = 0;  // 0 when passed
  double max_deviation = 0.0;
};

struct IdentityReport {
  std::vector<IdentityResult> entries;

  bool all_passed() const;
};

/// Compares each definitional function against its closed form on 1..bound:
/// u, mu, phi, lambda, d, N, sigma_1 through Bell reconstruction; nu, Omega
/// through prime-support reconstruction (all exact); Lambda in floats within
/// tol, also checking u * Lambda = ln n and mu * u' = Lambda.
IdentityReport verify_identities(const SpfSieve& sieve, std::int64_t bound, double tol);

}  // namespace arith
