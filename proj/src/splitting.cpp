#include "galois/splitting.hpp"

#include <algorithm>
#include <numeric>

#include "galois/factor.hpp"

namespace galois {
namespace {

template <class K>
using Elem = TowerElem<K>;

template <class K>
struct Pending {
  Poly<Elem<K>> factor;  // monic irreducible over the current tower
  int multiplicity;
};

std::string generator_label(std::size_t index) {
  static const std::string letters = "abcdefghjkmnpqrsuvwxyz";
  if (index < letters.size()) return std::string(1, letters[index]);
  return "a" + std::to_string(index);
}

template <class K>
std::string tower_text(const Tower<K>& tower) {
  std::string out = tower.base_name();
  for (const auto& [label, poly] : tower.describe()) out += "(" + label + ": " + poly + " = 0)";
  return out;
}

template <class K>
Factorization<K> factor_base(const Poly<K>& f, const SplittingLimits& limits) {
  if constexpr (std::is_same_v<K, Rational>) {
    return factor_q(f, limits.factor);
  } else {
    return factor_fp(f);
  }
}

template <class K>
std::vector<Pending<K>> factor_pending(const Poly<Elem<K>>& g, int multiplicity, const TowerPtr<K>& tower,
                                       const SplittingLimits& limits) {
  std::vector<Pending<K>> out;
  if (g.deg() == 1) {
    out.push_back({monic(tower->embed(g)), multiplicity});
    return out;
  }
  for (const auto& [h, m] : factor_over_extension(g, tower, limits.factor).factors) {
    out.push_back({h, multiplicity * m});
  }
  return out;
}

template <class K>
bool adjoin_before(const Poly<Elem<K>>& a, const Poly<Elem<K>>& b, AdjoinOrder order) {
  if (a.deg() != b.deg()) return order == AdjoinOrder::LowestDegree ? a.deg() < b.deg() : a.deg() > b.deg();
  const int c = compare_polys(a, b);
  return order == AdjoinOrder::LowestDegree ? c < 0 : c > 0;
}

}  // namespace

template <class K>
SplittingField<K> splitting_field_over(const TowerPtr<K>& over, const Poly<K>& f, const SplittingLimits& limits) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "splitting field of the zero polynomial");
  TowerPtr<K> tower = over;
  std::vector<Pending<K>> pending;
  if (over->depth() == 0) {
    for (const auto& [g, m] : factor_base(f, limits).factors) pending.push_back({over->embed_base(g), m});
  } else {
    for (const auto& [g, m] : factor_over_extension(over->embed_base(f), over, limits.factor).factors) {
      pending.push_back({g, m});
    }
  }

  std::vector<std::pair<Elem<K>, int>> roots;
  for (std::size_t step = 0;; ++step) {
    std::vector<Pending<K>> nonlinear;
    for (auto& item : pending) {
      if (item.factor.deg() == 1) {
        roots.emplace_back(-item.factor[0], item.multiplicity);
      } else {
        nonlinear.push_back(std::move(item));
      }
    }
    if (nonlinear.empty()) break;
    std::size_t pick = 0;
    for (std::size_t i = 1; i < nonlinear.size(); ++i) {
      if (adjoin_before(nonlinear[i].factor, nonlinear[pick].factor, limits.order)) pick = i;
    }
    const Poly<Elem<K>> chosen = nonlinear[pick].factor;
    const std::size_t next_degree = tower->degree() * static_cast<std::size_t>(chosen.deg());
    if (next_degree > limits.max_degree) {
      fail(ErrorKind::DegreeCap, "splitting field degree would reach at least " + std::to_string(next_degree) +
                                     ", above the cap " + std::to_string(limits.max_degree) +
                                     "; partial tower " + tower_text(*tower) + " of degree " +
                                     std::to_string(tower->degree()));
    }
    AdjoinOptions options;
    options.certified = true;
    options.limits = limits.factor;
    auto adjoined = adjoin_root(tower, chosen, generator_label(static_cast<std::size_t>(tower->depth())), options);
    tower = adjoined.tower;
    roots.emplace_back(adjoined.root, nonlinear[pick].multiplicity);

    pending.clear();
    for (std::size_t i = 0; i < nonlinear.size(); ++i) {
      Poly<Elem<K>> g = tower->embed(nonlinear[i].factor);
      if (i == pick) {
        g = exact_quotient(g, Poly<Elem<K>>(std::vector<Elem<K>>{-adjoined.root, tower->one()}));
        if (g.deg() < 1) continue;
      }
      for (auto& item : factor_pending(g, nonlinear[i].multiplicity, tower, limits)) pending.push_back(std::move(item));
    }
  }

  SplittingField<K> sf;
  sf.field = tower;
  sf.source = f;
  const TowerPtr<K> base = tower->base_tower();
  std::vector<std::pair<std::size_t, std::pair<Elem<K>, int>>> keyed;
  for (auto& [r, m] : roots) {
    Elem<K> x = tower->embed(r);
    keyed.push_back({relative_degree(x, *base), {std::move(x), m}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return compare(a.second.first, b.second.first) < 0;
  });
  for (auto& [deg, rm] : keyed) {
    sf.roots.push_back(std::move(rm.first));
    sf.multiplicities.push_back(rm.second);
  }
  return sf;
}

SplittingField<Rational> splitting_field_q(const QPoly& f, const SplittingLimits& limits) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "splitting field of the zero polynomial");
  return splitting_field_over(Tower<Rational>::base(Rational(0)), f, limits);
}

SplittingField<FpScalar> splitting_field_fp(const FpPoly& f, const SplittingLimits& limits) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "splitting field of the zero polynomial");
  const std::uint64_t p = f.leading().modulus();
  std::uint64_t d = 1;
  for (const auto& [g, m] : factor_fp(f).factors) d = std::lcm(d, static_cast<std::uint64_t>(g.deg()));
  Integer size;
  mpz_ui_pow_ui(size.get_mpz_t(), p, d);
  if (size > Integer(static_cast<unsigned long>(limits.enumeration_budget))) {
    fail(ErrorKind::DegreeCap, "GF(" + std::to_string(p) + "^" + std::to_string(d) + ") exceeds the element budget " +
                                   std::to_string(limits.enumeration_budget));
  }
  SplittingLimits l = limits;
  l.max_degree = static_cast<std::size_t>(d);
  auto sf = splitting_field_over(Tower<FpScalar>::base(FpScalar(0, p)), f, l);
  check_invariant(sf.degree() == d, "splitting field over F_p has the wrong degree");

  if (size <= Integer(static_cast<unsigned long>(limits.exhaustive_check_budget))) {
    const Poly<Elem<FpScalar>> g = sf.field->embed_base(f);
    std::size_t zeros = 0;
    for (const auto& x : all_elements(sf.field, limits.exhaustive_check_budget)) {
      if (eval(g, x).is_zero()) ++zeros;
    }
    check_invariant(zeros == sf.roots.size(), "factoring and exhaustive search disagree on the roots");
  }
  return sf;
}

template <class K>
bool verify_splits(const SplittingField<K>& sf) {
  if (!sf.field || sf.roots.size() != sf.multiplicities.size()) return false;
  const auto& tower = sf.field;
  Poly<Elem<K>> product = Poly<Elem<K>>::constant(tower->from_base(sf.source.leading()));
  for (std::size_t i = 0; i < sf.roots.size(); ++i) {
    if (sf.multiplicities[i] < 1) return false;
    const Elem<K> r = tower->embed(sf.roots[i]);
    const Poly<Elem<K>> lin(std::vector<Elem<K>>{-r, tower->one()});
    for (int k = 0; k < sf.multiplicities[i]; ++k) product = product * lin;
    for (std::size_t j = 0; j < i; ++j) {
      if (tower->embed(sf.roots[j]) == r) return false;
    }
  }
  if (!(product == tower->embed_base(sf.source))) return false;
  for (const auto& gen : tower->generators()) {
    bool found = false;
    for (const auto& r : sf.roots) found = found || tower->embed(r) == gen;
    if (!found) return false;
  }
  return true;
}

template <class K>
std::vector<TowerElem<K>> all_elements(const TowerPtr<K>& tower, std::uint64_t budget) {
  const std::uint64_t p = tower->characteristic();
  if (p == 0) fail(ErrorKind::Budget, "cannot enumerate an infinite field");
  Integer size;
  mpz_ui_pow_ui(size.get_mpz_t(), p, tower->degree());
  if (size > Integer(static_cast<unsigned long>(budget))) {
    fail(ErrorKind::Budget, "field of order " + size.get_str() + " exceeds the enumeration budget");
  }
  const std::size_t d = tower->degree();
  std::vector<std::uint64_t> digits(d, 0);
  std::vector<TowerElem<K>> out;
  out.reserve(size.get_ui());
  for (;;) {
    std::vector<K> coords;
    for (auto v : digits) coords.push_back(scalar_like(tower->zero(), static_cast<long>(v)));
    out.push_back(tower->element(std::move(coords)));
    std::size_t i = 0;
    while (i < d && ++digits[i] == p) digits[i++] = 0;
    if (i == d) break;
  }
  return out;
}

template SplittingField<Rational> splitting_field_over(const TowerPtr<Rational>&, const QPoly&,
                                                       const SplittingLimits&);
template SplittingField<FpScalar> splitting_field_over(const TowerPtr<FpScalar>&, const FpPoly&,
                                                       const SplittingLimits&);
template bool verify_splits(const SplittingField<Rational>&);
template bool verify_splits(const SplittingField<FpScalar>&);
template std::vector<TowerElem<FpScalar>> all_elements(const TowerPtr<FpScalar>&, std::uint64_t);
template std::vector<TowerElem<Rational>> all_elements(const TowerPtr<Rational>&, std::uint64_t);

}  // namespace galois
