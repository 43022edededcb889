#pragma once

// Factorization over towers and certified adjunction of roots. Over Q the
// factorization is Trager's norm method on the primitive-element model of the
// tower; over F_p it is the finite-field algorithm run on tower elements.

#include <string>

#include "galois/factor.hpp"
#include "galois/tower.hpp"

namespace galois {

/// Complete factorization of f over L into monic irreducibles.
/// DegreeCap when a norm of degree deg(f)*[L:Q] would exceed the limit.
template <class K>
Factorization<TowerElem<K>> factor_over_extension(const Poly<TowerElem<K>>& f, const TowerPtr<K>& tower,
                                                  const FactorLimits& limits = {});

struct AdjoinOptions {
  /// Skip the irreducibility check; the caller already holds a certificate.
  bool certified = false;
  FactorLimits limits{};
};

template <class K>
struct Adjoined {
  TowerPtr<K> tower;
  TowerElem<K> root;
};

/// L(a) with a a root of m. NotMonic or NotIrreducible when m is unfit.
template <class K>
Adjoined<K> adjoin_root(const TowerPtr<K>& tower, const Poly<TowerElem<K>>& m, std::string label,
                        const AdjoinOptions& options = {});

template <class K>
Adjoined<K> adjoin_root(const TowerPtr<K>& tower, const Poly<K>& m, std::string label,
                        const AdjoinOptions& options = {}) {
  return adjoin_root(tower, tower->embed_base(m), std::move(label), options);
}

/// Squarefree decomposition over a field of characteristic zero.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_char0(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of the zero polynomial");
  if (f.deg() == 0) return out;
  const Poly<F> a = monic(f);
  const Poly<F> da = derivative(a);
  const Poly<F> b = gcd(a, da);
  Poly<F> c = exact_quotient(a, b);
  Poly<F> d = exact_quotient(da, b) - derivative(c);
  int i = 1;
  while (c.deg() > 0) {
    Poly<F> g = gcd(c, d);
    if (g.deg() > 0) out.emplace_back(g, i);
    c = exact_quotient(c, g);
    d = exact_quotient(d, g) - derivative(c);
    ++i;
  }
  return out;
}

}  // namespace galois
