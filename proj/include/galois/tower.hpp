#pragma once

// Towers K(a1)(a2)...(ak) over Q or F_p. Each level is the quotient of the
// previous level's polynomial ring by a monic irreducible. Elements are flat
// coordinate vectors over the base: index i1 + d1*(i2 + d2*(i3 + ...)) holds
// the coefficient of a1^i1 a2^i2 a3^i3 ..., so the coordinates of a sub-tower
// element are a prefix of the coordinates of its image in any extension.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "galois/linalg.hpp"
#include "galois/poly.hpp"

namespace galois {

template <class K>
class Tower;

template <class K>
using TowerPtr = std::shared_ptr<const Tower<K>>;

template <class K>
class TowerElem {
 public:
  /// Zero of no particular tower; adopts the tower of whatever it meets.
  TowerElem() = default;
  TowerElem(TowerPtr<K> tower, std::vector<K> coords);
  /// The integer n inside `tower`.
  TowerElem(TowerPtr<K> tower, long n);

  static TowerElem from_base(TowerPtr<K> tower, const K& c);

  const TowerPtr<K>& tower() const { return tower_; }
  const std::vector<K>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the base field.
  bool is_base() const;
  K base_value() const;

  TowerElem& operator+=(const TowerElem& o);
  TowerElem& operator-=(const TowerElem& o);
  TowerElem& operator*=(const TowerElem& o) { return *this = *this * o; }

  friend TowerElem operator+(TowerElem a, const TowerElem& b) { return a += b; }
  friend TowerElem operator-(TowerElem a, const TowerElem& b) { return a -= b; }
  TowerElem operator-() const;
  friend TowerElem operator*(const TowerElem& a, const K& s) {
    TowerElem r = a;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

 private:
  void adopt(const TowerElem& o);

  TowerPtr<K> tower_;
  std::vector<K> c_;
};

template <class K>
TowerElem<K> operator*(const TowerElem<K>& a, const TowerElem<K>& b);
template <class K>
bool operator==(const TowerElem<K>& a, const TowerElem<K>& b);

/// Multiplicative inverse by Bezout in the parent level's polynomial ring.
template <class K>
TowerElem<K> inverse(const TowerElem<K>& x);

template <class K>
TowerElem<K> pow(const TowerElem<K>& x, const Integer& e);

/// Primitive element of a tower with the isomorphism to base[x]/(min_poly).
template <class K>
struct PrimitiveElement {
  TowerElem<K> element;
  Poly<K> min_poly;
  TowerPtr<K> simple;          // one-level tower base[x]/(min_poly)
  Matrix<K> to_power_basis;    // tower coordinates -> coordinates in 1, g, g^2, ...
  Matrix<K> from_power_basis;  // column j holds g^j in tower coordinates
};

template <class K>
class Tower : public std::enable_shared_from_this<Tower<K>> {
 public:
  struct Private {};

  Tower(Private, const K& zero, std::string label);
  Tower(Private, TowerPtr<K> parent, Poly<TowerElem<K>> min_poly, std::string label);
  Tower(const Tower&) = delete;
  Tower& operator=(const Tower&) = delete;

  /// Q or F_p with no adjoined generators.
  static TowerPtr<K> base(const K& zero);

  /// One more level; `min_poly` must be monic irreducible over `parent`.
  /// The caller is responsible for that certificate (see adjoin_root).
  static TowerPtr<K> extend(const TowerPtr<K>& parent, const Poly<TowerElem<K>>& min_poly, std::string label);

  /// One-level tower base[t]/(m).
  static TowerPtr<K> simple(const TowerPtr<K>& base, const Poly<K>& m, std::string label);

  const K& zero() const { return zero_; }
  std::uint64_t characteristic() const { return galois::characteristic(zero_); }
  /// Number of adjoined generators.
  int depth() const { return depth_; }
  std::size_t degree() const { return degree_; }
  std::size_t level_degree() const { return level_degree_; }
  const std::string& label() const { return label_; }
  const TowerPtr<K>& parent() const { return parent_; }
  /// Defining polynomial of the top generator over the parent level.
  const Poly<TowerElem<K>>& min_poly() const { return min_poly_; }

  /// The sub-tower with `level` generators (0 = base).
  TowerPtr<K> ancestor(int level) const;
  TowerPtr<K> base_tower() const { return ancestor(0); }
  /// True when `sub` is this tower or one of its ancestors.
  bool extends(const Tower& sub) const;
  /// [this : sub]; TowerMismatch if sub is not an ancestor.
  std::size_t degree_over(const Tower& sub) const;

  TowerElem<K> zero_element() const;
  TowerElem<K> one() const;
  TowerElem<K> from_base(const K& c) const;
  TowerElem<K> element(std::vector<K> coords) const;
  /// Generator of level `level` (1-based) as an element of this tower.
  TowerElem<K> generator(int level) const;
  std::vector<TowerElem<K>> generators() const;
  std::vector<std::string> labels() const;

  /// Image of an element of an ancestor tower.
  TowerElem<K> embed(const TowerElem<K>& x) const;
  Poly<TowerElem<K>> embed(const Poly<TowerElem<K>>& f) const;
  Poly<TowerElem<K>> embed_base(const Poly<K>& f) const;

  /// Flat coordinates of x * y (both of length degree()).
  std::vector<K> multiply(const std::vector<K>& x, const std::vector<K>& y) const;

  /// Cached primitive element; SearchExhausted if the search budget runs out.
  const PrimitiveElement<K>& primitive() const;

  std::string render(const TowerElem<K>& x) const;
  /// (label, min_poly text) per level, bottom up.
  std::vector<std::pair<std::string, std::string>> describe() const;
  std::string base_name() const;

 private:
  TowerPtr<K> parent_;
  Poly<TowerElem<K>> min_poly_;
  std::vector<std::vector<K>> min_poly_flat_;  // parent coordinates of each lower coefficient
  std::string label_;
  K zero_{};
  int depth_ = 0;
  std::size_t degree_ = 1;
  std::size_t level_degree_ = 1;

  mutable std::once_flag primitive_once_;
  mutable std::optional<PrimitiveElement<K>> primitive_;
};

/// Monic minimal polynomial of x over the base field.
template <class K>
Poly<K> min_poly(const TowerElem<K>& x);

/// [sub(x) : sub] for an ancestor `sub` of x's tower, by rank of the
/// sub-span of powers of x.
template <class K>
std::size_t relative_degree(const TowerElem<K>& x, const Tower<K>& sub);

/// True when x lies in the ancestor tower `sub`.
template <class K>
bool lies_in(const TowerElem<K>& x, const Tower<K>& sub);

/// Evaluate an element of `source` (an ancestor of the images' tower) after
/// sending generator i to images[i].
template <class K>
TowerElem<K> substitute(const Tower<K>& source, const std::vector<K>& coords, const std::vector<TowerElem<K>>& images,
                        const TowerPtr<K>& target);

/// Coefficients mapped through a tower with the given generator images.
template <class K>
Poly<TowerElem<K>> substitute_poly(const Poly<TowerElem<K>>& f, const std::vector<TowerElem<K>>& images,
                                   const TowerPtr<K>& target);

// --- scalar vocabulary ----------------------------------------------------

template <class K>
bool is_zero(const TowerElem<K>& x) {
  return x.is_zero();
}
template <class K>
bool is_one(const TowerElem<K>& x) {
  return x.is_one();
}
template <class K>
TowerElem<K> scalar_like(const TowerElem<K>& like, long n) {
  if (!like.tower()) {
    if (n != 0) fail(ErrorKind::TowerMismatch, "integer constant requested without a tower");
    return TowerElem<K>();
  }
  return TowerElem<K>(like.tower(), n);
}
template <class K>
TowerElem<K> exact_div(const TowerElem<K>& a, const TowerElem<K>& b) {
  return a * inverse(b);
}
template <class K>
TowerElem<K> operator/(const TowerElem<K>& a, const TowerElem<K>& b) {
  return a * inverse(b);
}
template <class K>
TowerElem<K> negate(const TowerElem<K>& x) {
  return -x;
}
/// Sign of the highest nonzero coordinate, so rendering can pull it out.
template <class K>
bool is_negative(const TowerElem<K>& x) {
  for (std::size_t i = x.coords().size(); i-- > 0;) {
    if (!is_zero(x.coords()[i])) return is_negative(x.coords()[i]);
  }
  return false;
}
template <class K>
bool needs_parens(const TowerElem<K>& x) {
  int nonzero = 0;
  for (const auto& c : x.coords()) nonzero += is_zero(c) ? 0 : 1;
  return nonzero > 1;
}
/// Lexicographic on flat coordinates, index 0 first.
template <class K>
int compare(const TowerElem<K>& a, const TowerElem<K>& b) {
  const std::size_t n = std::max(a.coords().size(), b.coords().size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool ha = i < a.coords().size(), hb = i < b.coords().size();
    if (!ha || !hb) {
      const K& x = ha ? a.coords()[i] : b.coords()[i];
      if (is_zero(x)) continue;
      const int s = compare(x, scalar_like(x, 0));
      return ha ? s : -s;
    }
    const int c = compare(a.coords()[i], b.coords()[i]);
    if (c != 0) return c;
  }
  return 0;
}
template <class K>
std::uint64_t characteristic(const TowerElem<K>& x) {
  return x.tower() ? x.tower()->characteristic() : 0;
}
template <class K>
std::string to_string(const TowerElem<K>& x) {
  return x.tower() ? x.tower()->render(x) : "0";
}

/// Number of elements of a finite tower.
template <class K>
Integer field_order(const TowerElem<K>& like) {
  const std::uint64_t p = like.tower()->characteristic();
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, like.tower()->degree());
  return q;
}
/// The unique p-th root x^(q/p) in a finite tower.
template <class K>
TowerElem<K> pth_root(const TowerElem<K>& x) {
  const std::uint64_t p = x.tower()->characteristic();
  return pow(x, Integer(field_order(x) / static_cast<unsigned long>(p)));
}
template <class K>
TowerElem<K> random_element(const TowerElem<K>& like, std::mt19937_64& rng) {
  std::vector<K> c;
  for (std::size_t i = 0; i < like.tower()->degree(); ++i) c.push_back(random_element(like.tower()->zero(), rng));
  return TowerElem<K>(like.tower(), std::move(c));
}

extern template class TowerElem<Rational>;
extern template class TowerElem<FpScalar>;
extern template class Tower<Rational>;
extern template class Tower<FpScalar>;

}  // namespace galois
