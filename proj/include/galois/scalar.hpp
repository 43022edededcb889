#pragma once

// Uniform vocabulary for coefficient types. Generic code (polynomials,
// matrices, towers) only talks to scalars through these free functions and
// the arithmetic operators; each coefficient type overloads them next to its
// definition so lookup finds them.

#include <cstdint>
#include <string>

#include "galois/numbers.hpp"

namespace galois {

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const FpScalar& x) { return x.residue() == 0; }

inline bool is_one(const Integer& x) { return x == 1; }
inline bool is_one(const Rational& x) { return x == 1; }
inline bool is_one(const FpScalar& x) { return x.residue() == 1; }

/// The integer n as an element of the ring `like` lives in.
inline Integer scalar_like(const Integer&, long n) { return Integer(n); }
inline Rational scalar_like(const Rational&, long n) { return Rational(n); }
inline FpScalar scalar_like(const FpScalar& like, long n) { return FpScalar(n, like.modulus()); }

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) fail(ErrorKind::DivisionByZero, "inverse of rational zero");
  return 1 / x;
}
inline FpScalar inverse(const FpScalar& x) { return fp_inv(x); }

/// a / b where b is known to divide a.
inline Integer exact_div(const Integer& a, const Integer& b) {
  if (is_zero(b)) fail(ErrorKind::DivisionByZero, "exact division by zero");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational exact_div(const Rational& a, const Rational& b) { return a * inverse(b); }
inline FpScalar exact_div(const FpScalar& a, const FpScalar& b) { return a * inverse(b); }

inline bool is_negative(const Integer& x) { return sgn(x) < 0; }
inline bool is_negative(const Rational& x) { return sgn(x) < 0; }
inline bool is_negative(const FpScalar&) { return false; }

inline Integer negate(const Integer& x) { return -x; }
inline Rational negate(const Rational& x) { return -x; }
inline FpScalar negate(const FpScalar& x) { return -x; }

/// Compound values need brackets when printed as a coefficient.
inline bool needs_parens(const Integer&) { return false; }
inline bool needs_parens(const Rational&) { return false; }
inline bool needs_parens(const FpScalar&) { return false; }

/// Total order used for canonical sorting.
inline int compare(const Integer& a, const Integer& b) { return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0); }
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0); }
inline int compare(const FpScalar& a, const FpScalar& b) {
  return a.residue() < b.residue() ? -1 : (a.residue() > b.residue() ? 1 : 0);
}

inline std::uint64_t characteristic(const Rational&) { return 0; }
inline std::uint64_t characteristic(const FpScalar& x) { return x.modulus(); }

}  // namespace galois
