#pragma once

// Exact scalars: GMP-backed integers and rationals, prime-field residues and
// the trial-division number theory the rest of the engine leans on.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "galois/errors.hpp"

namespace galois {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Upper limit for deterministic trial division.
inline constexpr std::uint64_t kDefaultTrialDivisionCap = 1'000'000'000'000ULL;

/// Residue class modulo a prime p < 2^32. The modulus travels with the value
/// so polynomials over F_p need no side channel for their field.
class FpScalar {
 public:
  FpScalar() = default;
  FpScalar(std::int64_t value, std::uint64_t p);

  std::uint64_t residue() const noexcept { return residue_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  FpScalar& operator+=(const FpScalar& o);
  FpScalar& operator-=(const FpScalar& o);
  FpScalar& operator*=(const FpScalar& o);
  FpScalar& operator/=(const FpScalar& o);

  friend FpScalar operator+(FpScalar a, const FpScalar& b) { return a += b; }
  friend FpScalar operator-(FpScalar a, const FpScalar& b) { return a -= b; }
  friend FpScalar operator*(FpScalar a, const FpScalar& b) { return a *= b; }
  friend FpScalar operator/(FpScalar a, const FpScalar& b) { return a /= b; }
  FpScalar operator-() const;

  friend bool operator==(const FpScalar& a, const FpScalar& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_;
  }

 private:
  void check_same_field(const FpScalar& o) const;

  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Multiplicative inverse via the extended Euclidean algorithm in Z.
FpScalar fp_inv(const FpScalar& a);

FpScalar fp_pow(FpScalar base, std::uint64_t exponent);

bool is_prime(std::uint64_t n, std::uint64_t cap = kDefaultTrialDivisionCap);

/// Prime factors with multiplicity, ascending.
std::vector<std::uint64_t> factor_integer(
    std::uint64_t n, std::uint64_t cap = kDefaultTrialDivisionCap);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(
    std::uint64_t n, std::uint64_t cap = kDefaultTrialDivisionCap);

/// Positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n,
                                    std::uint64_t cap = kDefaultTrialDivisionCap);

bool is_fermat_prime(std::uint64_t q);

bool is_power_of_two(std::uint64_t n);

Integer binomial(unsigned n, unsigned k);

/// Primes in [2, bound], ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// n as uint64 if it fits, otherwise Budget.
std::uint64_t to_u64(const Integer& n);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const FpScalar& x);

}  // namespace galois
