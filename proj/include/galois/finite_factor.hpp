#pragma once

// Factorization over a finite field F_q, generic in the element type so the
// same code serves F_p and towers over F_p. Squarefree decomposition, then
// distinct-degree splitting with gcd(f, t^(q^d) - t), then Cantor-Zassenhaus
// equal-degree splitting driven by a fixed-seed generator.
//
// Element types provide: field_order(like) -> Integer, characteristic(like),
// pth_root(x), random_element(like, rng).

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "galois/factorization.hpp"
#include "galois/poly.hpp"

namespace galois {

inline Integer field_order(const FpScalar& like) { return Integer(static_cast<unsigned long>(like.modulus())); }
inline FpScalar pth_root(const FpScalar& x) { return x; }
inline FpScalar random_element(const FpScalar& like, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, like.modulus() - 1);
  return FpScalar(static_cast<std::int64_t>(d(rng)), like.modulus());
}

namespace finite_detail {

/// h with h(t)^p = f(t) for f a polynomial in t^p.
template <class F>
Poly<F> pth_root_poly(const Poly<F>& f, std::uint64_t p) {
  std::vector<F> v;
  for (std::size_t k = 0; k < f.size(); k += p) v.push_back(pth_root(f[k]));
  return Poly<F>(std::move(v));
}

template <class F>
void squarefree_parts(const Poly<F>& f, int scale, std::vector<std::pair<Poly<F>, int>>& out) {
  if (f.deg() == 0) return;
  const std::uint64_t p = characteristic(f.leading());
  const Poly<F> df = derivative(f);
  if (df.is_zero()) {
    squarefree_parts(pth_root_poly(f, p), scale * static_cast<int>(p), out);
    return;
  }
  Poly<F> c = gcd(f, df);
  Poly<F> w = exact_quotient(f, c);
  int i = 1;
  while (w.deg() > 0) {
    Poly<F> y = gcd(w, c);
    Poly<F> fac = exact_quotient(w, y);
    if (fac.deg() > 0) out.emplace_back(monic(fac), i * scale);
    w = std::move(y);
    c = exact_quotient(c, w);
    ++i;
  }
  if (c.deg() > 0) squarefree_parts(pth_root_poly(c, p), scale * static_cast<int>(p), out);
}

template <class F>
Poly<F> random_poly_below(const Poly<F>& g, std::mt19937_64& rng) {
  std::vector<F> v;
  for (int i = 0; i < g.deg(); ++i) v.push_back(random_element(g.leading(), rng));
  return Poly<F>(std::move(v));
}

template <class F>
void equal_degree_split(const Poly<F>& g, int d, const Integer& q, std::mt19937_64& rng,
                        std::vector<Poly<F>>& out) {
  if (g.deg() == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t p = characteristic(g.leading());
  const Poly<F> one = Poly<F>::constant(scalar_like(g.leading(), 1));
  Integer qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  while (true) {
    Poly<F> a = random_poly_below(g, rng);
    if (a.is_zero() || a.deg() < 1) continue;
    Poly<F> b;
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(k d - 1)) with q^d = 2^(k d).
      const std::size_t bits = mpz_sizeinbase(qd.get_mpz_t(), 2) - 1;
      Poly<F> term = a;
      b = a;
      for (std::size_t i = 1; i < bits; ++i) {
        term = rem(term * term, g);
        b += term;
      }
    } else {
      Integer e = (qd - 1) / 2;
      b = powmod(a, e, g) - one;
    }
    Poly<F> h = gcd(g, b);
    if (h.deg() > 0 && h.deg() < g.deg()) {
      equal_degree_split(h, d, q, rng, out);
      equal_degree_split(exact_quotient(g, h), d, q, rng, out);
      return;
    }
  }
}

/// (product of all irreducible factors of degree d, d) for squarefree monic f.
template <class F>
std::vector<std::pair<Poly<F>, int>> distinct_degree(Poly<F> f, const Integer& q) {
  std::vector<std::pair<Poly<F>, int>> out;
  const Poly<F> t = Poly<F>::identity(f.leading());
  Poly<F> h = rem(t, f);
  int d = 0;
  while (f.deg() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, q, f);
    Poly<F> g = gcd(f, h - t);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      f = exact_quotient(f, g);
      h = rem(h, f);
    }
  }
  if (f.deg() > 0) out.emplace_back(f, f.deg());
  return out;
}

}  // namespace finite_detail

/// Complete factorization of a nonzero polynomial over a finite field.
template <class F>
Factorization<F> factor_finite_field(const Poly<F>& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of the zero polynomial");
  Factorization<F> result;
  result.unit = f.leading();
  if (f.deg() == 0) return result;
  const Integer q = field_order(f.leading());
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<std::pair<Poly<F>, int>> parts;
  finite_detail::squarefree_parts(monic(f), 1, parts);
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, d] : finite_detail::distinct_degree(part, q)) {
      std::vector<Poly<F>> pieces;
      finite_detail::equal_degree_split(block, d, q, rng, pieces);
      for (auto& piece : pieces) result.factors.emplace_back(monic(piece), mult);
    }
  }
  result.canonicalize();
  return result;
}

/// Irreducibility over F_q by Rabin's test: t^(q^n) = t mod f and
/// gcd(t^(q^(n/r)) - t, f) = 1 for every prime r | n.
template <class F>
bool is_irreducible_finite(const Poly<F>& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "irreducibility of the zero polynomial");
  const int n = f.deg();
  if (n < 1) fail(ErrorKind::ConstantPolynomial, "constants are neither reducible nor irreducible");
  if (n == 1) return true;
  const Poly<F> g = monic(f);
  const Integer q = field_order(f.leading());
  const Poly<F> t = Poly<F>::identity(f.leading());
  // powers[k] = t^(q^k) mod g
  std::vector<Poly<F>> powers{rem(t, g)};
  for (int k = 1; k <= n; ++k) powers.push_back(powmod(powers.back(), q, g));
  if (!(powers[n] == rem(t, g))) return false;
  for (auto r : prime_divisors(static_cast<std::uint64_t>(n))) {
    const Poly<F> h = powers[n / static_cast<int>(r)] - t;
    if (gcd(g, h).deg() > 0) return false;
  }
  return true;
}

}  // namespace galois
