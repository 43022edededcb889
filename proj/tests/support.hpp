#pragma once

// Shared helpers for the unit tests: seeded random polynomials and scalars.

#include <ostream>
#include <random>

#include "galois/poly.hpp"

namespace galois {

// Readable gtest failure messages.
template <class R>
void PrintTo(const Poly<R>& f, std::ostream* os) {
  *os << to_string(f);
}
inline void PrintTo(const FpScalar& x, std::ostream* os) { *os << to_string(x); }

}  // namespace galois

namespace galois::support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261016);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 9) {
  long den = 0;
  while (den == 0) den = uniform(1, bound);
  return make_rational(Integer(uniform(-bound, bound)), Integer(den));
}

inline QPoly random_qpoly(int degree, long bound = 9, bool integral = true) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(integral ? Rational(uniform(-bound, bound)) : random_rational(bound));
  while (c.back() == 0) c.back() = Rational(uniform(1, bound));
  return QPoly(std::move(c));
}

inline FpPoly random_fppoly(int degree, std::uint64_t p) {
  std::vector<FpScalar> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(0, static_cast<long>(p) - 1), p);
  if (c.back().residue() == 0) c.back() = FpScalar(1, p);
  return FpPoly(std::move(c));
}

}  // namespace galois::support
