#include "galois/factor.hpp"

namespace galois {

Factorization<FpScalar> factor_fp(const FpPoly& f) { return factor_finite_field(f); }

bool is_irreducible_fp(const FpPoly& f) { return is_irreducible_finite(f); }

Factorization<FpScalar> factor_fp_trial_division(const FpPoly& f, std::uint64_t budget) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of the zero polynomial");
  Factorization<FpScalar> result;
  result.unit = f.leading();
  const std::uint64_t p = f.leading().modulus();
  FpPoly rest = monic(f);
  std::uint64_t spent = 0;
  for (int d = 1; 2 * d <= rest.deg(); ++d) {
    // All monic polynomials of degree d, low coefficients as base-p digits.
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
      if (count > budget / p) fail(ErrorKind::Budget, "trial division candidate count exceeds budget");
      count *= p;
    }
    spent += count;
    if (spent > budget) fail(ErrorKind::Budget, "trial division candidate count exceeds budget");
    for (std::uint64_t idx = 0; idx < count && 2 * d <= rest.deg(); ++idx) {
      std::vector<FpScalar> c;
      std::uint64_t x = idx;
      for (int i = 0; i < d; ++i) {
        c.emplace_back(static_cast<std::int64_t>(x % p), p);
        x /= p;
      }
      c.emplace_back(1, p);
      FpPoly g(std::move(c));
      int mult = 0;
      while (true) {
        auto [q, r] = divmod(rest, g);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult > 0) result.factors.emplace_back(g, mult);
    }
  }
  if (rest.deg() > 0) result.factors.emplace_back(rest, 1);
  result.canonicalize();
  return result;
}

std::vector<FpScalar> roots_fp(const FpPoly& f, std::uint64_t budget) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const std::uint64_t p = f.leading().modulus();
  if (p > budget) fail(ErrorKind::Budget, "F_p too large for exhaustive root search");
  std::vector<FpScalar> roots;
  for (std::uint64_t a = 0; a < p; ++a) {
    FpScalar x(static_cast<std::int64_t>(a), p);
    if (is_zero(eval(f, x))) roots.push_back(x);
  }
  return roots;
}

}  // namespace galois
