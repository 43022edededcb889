#include "galois/numbers.hpp"

#include <algorithm>
#include <string>

namespace galois {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::DegreeCap: return "DegreeCap";
    case ErrorKind::OrderCap: return "OrderCap";
    case ErrorKind::Budget: return "Budget";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

FpScalar::FpScalar(std::int64_t value, std::uint64_t p) : modulus_(p) {
  if (p < 2 || p >= (1ULL << 32)) fail(ErrorKind::NotPrime, "prime modulus out of range: " + std::to_string(p));
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  residue_ = static_cast<std::uint64_t>(r);
}

void FpScalar::check_same_field(const FpScalar& o) const {
  if (modulus_ != o.modulus_) {
    fail(ErrorKind::TowerMismatch, "F_p scalars with different moduli " + std::to_string(modulus_) +
                                       " and " + std::to_string(o.modulus_));
  }
}

FpScalar& FpScalar::operator+=(const FpScalar& o) {
  check_same_field(o);
  residue_ += o.residue_;
  if (residue_ >= modulus_) residue_ -= modulus_;
  return *this;
}

FpScalar& FpScalar::operator-=(const FpScalar& o) {
  check_same_field(o);
  residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + modulus_ - o.residue_;
  return *this;
}

FpScalar& FpScalar::operator*=(const FpScalar& o) {
  check_same_field(o);
  residue_ = (residue_ * o.residue_) % modulus_;
  return *this;
}

FpScalar& FpScalar::operator/=(const FpScalar& o) {
  check_same_field(o);
  return *this *= fp_inv(o);
}

FpScalar FpScalar::operator-() const {
  FpScalar r = *this;
  if (r.residue_ != 0) r.residue_ = modulus_ - r.residue_;
  return r;
}

FpScalar fp_inv(const FpScalar& a) {
  if (a.residue() == 0) fail(ErrorKind::ZeroInverse, "inverse of 0 in F_" + std::to_string(a.modulus()));
  // Bezout in Z: a*s + p*t = 1.
  std::int64_t r0 = static_cast<std::int64_t>(a.modulus());
  std::int64_t r1 = static_cast<std::int64_t>(a.residue());
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  check_invariant(r0 == 1, "fp_inv: modulus is not prime");
  return FpScalar(s0, a.modulus());
}

FpScalar fp_pow(FpScalar base, std::uint64_t exponent) {
  FpScalar result(1, base.modulus());
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

namespace {

void check_cap(std::uint64_t n, std::uint64_t cap) {
  if (n > cap) {
    fail(ErrorKind::Budget, "integer " + std::to_string(n) + " exceeds trial-division cap " + std::to_string(cap));
  }
}

}  // namespace

bool is_prime(std::uint64_t n, std::uint64_t cap) {
  check_cap(n, cap);
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> factor_integer(std::uint64_t n, std::uint64_t cap) {
  check_cap(n, cap);
  if (n == 0) fail(ErrorKind::DivisionByZero, "factor_integer(0)");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n, std::uint64_t cap) {
  auto all = factor_integer(n, cap);
  std::vector<std::uint64_t> out;
  for (auto q : all) {
    if (out.empty() || out.back() != q) out.push_back(q);
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n, std::uint64_t cap) {
  std::vector<std::uint64_t> out{1};
  auto primes = factor_integer(n, cap);
  std::size_t i = 0;
  while (i < primes.size()) {
    std::uint64_t q = primes[i];
    std::size_t mult = 0;
    while (i < primes.size() && primes[i] == q) {
      ++mult;
      ++i;
    }
    std::vector<std::uint64_t> next;
    for (auto d : out) {
      std::uint64_t pw = 1;
      for (std::size_t e = 0; e <= mult; ++e) {
        next.push_back(d * pw);
        pw *= q;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool is_fermat_prime(std::uint64_t q) { return q >= 3 && is_power_of_two(q - 1) && is_prime(q); }

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t to_u64(const Integer& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) fail(ErrorKind::Budget, "integer out of 64-bit range: " + n.get_str());
  return mpz_get_ui(n.get_mpz_t());
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const FpScalar& x) { return std::to_string(x.residue()); }

}  // namespace galois
