#pragma once

// Dense univariate polynomials over a coefficient ring R. R is any type with
// the scalar vocabulary of scalar.hpp (Integer, Rational, FpScalar,
// TowerElem<K>, or Poly<Rational> itself for bivariate work). Operations that
// need division (divmod, gcd) require R to be a field.

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois/scalar.hpp"

namespace galois {

/// Degree of a polynomial; the zero polynomial has degree -infinity and
/// -infinity absorbs addition.
class Degree {
 public:
  enum class Kind { Finite, NegInfinity };

  constexpr Degree(int value) : kind_(Kind::Finite), value_(value) {}  // NOLINT: implicit by design of comparisons
  static constexpr Degree neg_infinity() {
    Degree d(0);
    d.kind_ = Kind::NegInfinity;
    return d;
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_neg_infinity() const { return kind_ == Kind::NegInfinity; }
  int value() const {
    if (is_neg_infinity()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial is -infinity");
    return value_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.kind_ == b.kind_ && (a.is_neg_infinity() || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) {
      return static_cast<int>(!a.is_neg_infinity()) <=> static_cast<int>(!b.is_neg_infinity());
    }
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return is_neg_infinity() ? "-inf" : std::to_string(value_); }

 private:
  Kind kind_;
  int value_;
};

/// Least exponent with a nonzero coefficient; +infinity for the zero polynomial.
class Codegree {
 public:
  enum class Kind { Finite, Infinity };

  constexpr Codegree(int value) : kind_(Kind::Finite), value_(value) {}  // NOLINT
  static constexpr Codegree infinity() {
    Codegree d(0);
    d.kind_ = Kind::Infinity;
    return d;
  }

  constexpr bool is_infinity() const { return kind_ == Kind::Infinity; }
  int value() const {
    if (is_infinity()) fail(ErrorKind::ZeroPolynomial, "codegree of the zero polynomial is infinity");
    return value_;
  }

  friend constexpr Codegree operator+(Codegree a, Codegree b) {
    if (a.is_infinity() || b.is_infinity()) return infinity();
    return Codegree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Codegree a, Codegree b) {
    return a.kind_ == b.kind_ && (a.is_infinity() || a.value_ == b.value_);
  }

  std::string to_string() const { return is_infinity() ? "inf" : std::to_string(value_); }

 private:
  Kind kind_;
  int value_;
};

namespace poly_detail {
// Unqualified so coefficient types declared later are found by ADL.
template <class R>
bool coeff_is_zero(const R& x) {
  return is_zero(x);
}
}  // namespace poly_detail

template <class R>
class Poly {
 public:
  using value_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}); }
  static Poly monomial(const R& c, std::size_t k) {
    if (poly_detail::coeff_is_zero(c)) return Poly();
    std::vector<R> v(k + 1, scalar_like(c, 0));
    v[k] = c;
    return Poly(std::move(v));
  }
  /// The indeterminate t over the ring of `like`.
  static Poly identity(const R& like) { return monomial(scalar_like(like, 1), 1); }

  bool is_zero() const { return c_.empty(); }
  Degree degree() const {
    return c_.empty() ? Degree::neg_infinity() : Degree(static_cast<int>(c_.size()) - 1);
  }
  /// Degree of a polynomial known to be nonzero.
  int deg() const { return degree().value(); }
  std::size_t size() const { return c_.size(); }
  const R& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<R>& coefficients() const { return c_; }
  const R& leading() const {
    if (c_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && is_one(c_.back()); }

  Poly operator-() const {
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(negate(a));
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) {
      c_.reserve(o.c_.size());
      for (std::size_t i = c_.size(); i < o.c_.size(); ++i) c_.push_back(scalar_like(o.c_[i], 0));
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) {
      c_.reserve(o.c_.size());
      for (std::size_t i = c_.size(); i < o.c_.size(); ++i) c_.push_back(scalar_like(o.c_[i], 0));
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, scalar_like(a.c_[0], 0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (poly_detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (poly_detail::coeff_is_zero(b.c_[j])) continue;
        v[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const R& s) {
    if (poly_detail::coeff_is_zero(s)) return Poly();
    std::vector<R> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(x * s);
    return Poly(std::move(v));
  }
  friend Poly operator*(const R& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && poly_detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;
using FpPoly = Poly<FpScalar>;

// --- scalar vocabulary for polynomials used as coefficients -------------

template <class R>
bool is_zero(const Poly<R>& f) {
  return f.is_zero();
}
template <class R>
bool is_one(const Poly<R>& f) {
  return f.size() == 1 && is_one(f[0]);
}
template <class R>
Poly<R> scalar_like(const Poly<R>& like, long n) {
  R base = like.is_zero() ? R{} : like[0];
  return Poly<R>::constant(scalar_like(base, n));
}
template <class R>
Poly<R> negate(const Poly<R>& f) {
  return -f;
}
template <class R>
bool is_negative(const Poly<R>&) {
  return false;
}
template <class R>
bool needs_parens(const Poly<R>& f) {
  return f.size() > 1;
}

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b);

// --- field algorithms ------------------------------------------------------

template <class R>
R power(const R& x, unsigned long e) {
  R result = scalar_like(x, 1);
  R base = x;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return result;
}

/// f = q*g + r with deg r < deg g. Requires a field.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& f, const Poly<R>& g) {
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (f.degree() < g.degree()) return {Poly<R>(), f};
  const R inv_lc = inverse(g.leading());
  std::vector<R> r = f.coefficients();
  const std::size_t dg = g.size() - 1;
  const std::size_t n = r.size();
  std::vector<R> q(n - dg, scalar_like(inv_lc, 0));
  for (std::size_t k = n; k-- > dg;) {
    if (is_zero(r[k])) continue;
    R c = r[k] * inv_lc;
    for (std::size_t j = 0; j < dg; ++j) {
      if (!is_zero(g[j])) r[k - dg + j] -= c * g[j];
    }
    r[k] = scalar_like(inv_lc, 0);
    q[k - dg] = std::move(c);
  }
  r.resize(dg, scalar_like(inv_lc, 0));
  return {Poly<R>(std::move(q)), Poly<R>(std::move(r))};
}

template <class R>
Poly<R> rem(const Poly<R>& f, const Poly<R>& g) {
  return divmod(f, g).second;
}

/// Exact quotient; InternalInvariant if g does not divide f.
template <class R>
Poly<R> exact_quotient(const Poly<R>& f, const Poly<R>& g) {
  auto [q, r] = divmod(f, g);
  check_invariant(r.is_zero(), "exact_quotient: nonzero remainder");
  return q;
}

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  return exact_quotient(a, b);
}

template <class R>
Poly<R> monic(const Poly<R>& f) {
  if (f.is_zero()) return f;
  return f * inverse(f.leading());
}

/// Monic remainders keep coefficient growth in check over Q and its extensions.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    Poly<R> r = monic(rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class R>
struct Bezout {
  Poly<R> d;  // monic generator of <f, g>, zero iff f = g = 0
  Poly<R> a;
  Poly<R> b;  // d = a*f + b*g
};

template <class R>
Bezout<R> gcd_ext(const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero() && g.is_zero()) return {};
  const R& like = f.is_zero() ? g.leading() : f.leading();
  Poly<R> r0 = f, r1 = g;
  Poly<R> s0 = Poly<R>::constant(scalar_like(like, 1)), s1;
  Poly<R> t0, t1 = Poly<R>::constant(scalar_like(like, 1));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Poly<R> s2 = s0 - q * s1;
    Poly<R> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const R inv = inverse(r0.leading());
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class R>
Poly<R> derivative(const Poly<R>& f) {
  if (f.size() <= 1) return Poly<R>();
  std::vector<R> v;
  v.reserve(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) v.push_back(f[i] * scalar_like(f[i], static_cast<long>(i)));
  return Poly<R>(std::move(v));
}

/// True iff f shares a nonconstant factor with its derivative.
template <class R>
bool has_repeated_root(const Poly<R>& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "has_repeated_root of the zero polynomial");
  return gcd(f, derivative(f)).degree() >= 1;
}

template <class R>
R eval(const Poly<R>& f, const R& a) {
  R acc = scalar_like(a, 0);
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * a + f[k];
  return acc;
}

/// g(u) = f(u + c).
template <class R>
Poly<R> shift(const Poly<R>& f, const R& c) {
  if (f.is_zero()) return f;
  const Poly<R> lin(std::vector<R>{c, scalar_like(c, 1)});
  Poly<R> acc;
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * lin + Poly<R>::constant(f[k]);
  return acc;
}

/// f(g(t)).
template <class R>
Poly<R> compose(const Poly<R>& f, const Poly<R>& g) {
  Poly<R> acc;
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * g + Poly<R>::constant(f[k]);
  return acc;
}

/// base^e mod m for an arbitrary-precision exponent.
template <class R>
Poly<R> powmod(const Poly<R>& base, const Integer& e, const Poly<R>& m) {
  Poly<R> result = Poly<R>::constant(scalar_like(m.leading(), 1));
  result = rem(result, m);
  Poly<R> b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
  }
  return result;
}

template <class R>
Codegree codegree(const Poly<R>& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_zero(f[i])) return Codegree(static_cast<int>(i));
  }
  return Codegree::infinity();
}

/// Pseudo-remainder lc(B)^(deg A - deg B + 1) * A mod B, computed without
/// division so it works over any integral domain.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int delta = a.deg() - b.deg();
  const R& lb = b.leading();
  Poly<R> r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly<R> sub = Poly<R>::monomial(r.leading(), static_cast<std::size_t>(r.deg() - b.deg())) * b;
    r = r * lb - sub;
    ++steps;
  }
  for (int i = steps; i < delta + 1; ++i) r = r * lb;
  return r;
}

/// Resultant by the subresultant pseudo-remainder sequence. R only needs to
/// be an integral domain with exact division.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
  const R one = scalar_like(a.leading(), 1);
  R sign = one;
  if (a.deg() < b.deg()) {
    std::swap(a, b);
    if (a.deg() % 2 == 1 && b.deg() % 2 == 1) sign = negate(sign);
  }
  if (b.deg() == 0) return sign * power(b.leading(), static_cast<unsigned long>(a.deg()));
  R g = one;
  R h = one;
  while (true) {
    const int delta = a.deg() - b.deg();
    if (a.deg() % 2 == 1 && b.deg() % 2 == 1) sign = negate(sign);
    Poly<R> r = pseudo_rem(a, b);
    if (r.is_zero()) return scalar_like(one, 0);
    a = std::move(b);
    const R divisor = g * power(h, static_cast<unsigned long>(delta));
    std::vector<R> rc;
    rc.reserve(r.size());
    for (const auto& c : r.coefficients()) rc.push_back(exact_div(c, divisor));
    b = Poly<R>(std::move(rc));
    g = a.leading();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) {
      h = exact_div(power(g, static_cast<unsigned long>(delta)), power(h, static_cast<unsigned long>(delta - 1)));
    }
    if (b.deg() == 0) {
      const auto da = static_cast<unsigned long>(a.deg());
      R last = exact_div(power(b.leading(), da), power(h, da - 1));
      return sign * last;
    }
  }
}

/// Canonical total order: by degree, then coefficients from the top down.
template <class R>
int compare_polys(const Poly<R>& f, const Poly<R>& g) {
  if (f.size() != g.size()) return f.size() < g.size() ? -1 : 1;
  for (std::size_t k = f.size(); k-- > 0;) {
    int c = compare(f[k], g[k]);
    if (c != 0) return c;
  }
  return 0;
}

template <class R>
int compare(const Poly<R>& f, const Poly<R>& g) {
  return compare_polys(f, g);
}

/// "a_n*t^n + ... + a_0" with exact coefficients.
template <class R>
std::string render(const Poly<R>& f, std::string_view var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = f.size(); k-- > 0;) {
    const R& c = f[k];
    if (is_zero(c)) continue;
    const bool neg = is_negative(c);
    const R mag = neg ? negate(c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool unit = is_one(mag);
    std::string mono;
    if (k >= 1) {
      mono = std::string(var);
      if (k >= 2) mono += "^" + std::to_string(k);
    }
    if (k == 0) {
      out += to_string(mag);
    } else if (unit) {
      out += mono;
    } else {
      std::string cs = to_string(mag);
      out += needs_parens(mag) ? "(" + cs + ")" : cs;
      out += "*" + mono;
    }
  }
  return out;
}

template <class R>
std::string to_string(const Poly<R>& f) {
  return render(f, "t");
}

// --- integer / rational specifics (poly.cpp) ------------------------------

/// Gcd of the coefficients (nonnegative); 0 for the zero polynomial.
Integer content(const ZPoly& f);

/// f divided by its content, sign fixed so the leading coefficient is positive.
ZPoly primitive_part(const ZPoly& f);

struct ContentPrimitive {
  Rational content;
  ZPoly primitive;  // f = content * primitive
};

/// f = alpha * F with F primitive in Z[t] and lc(F) > 0.
ContentPrimitive content_primitive(const QPoly& f);

QPoly to_rational(const ZPoly& f);
FpPoly reduce_mod(const ZPoly& f, std::uint64_t p);

/// Polynomial from small integer coefficients, low degree first.
QPoly qpoly(std::initializer_list<long> coeffs);
ZPoly zpoly(std::initializer_list<long> coeffs);
FpPoly fppoly(std::initializer_list<long> coeffs, std::uint64_t p);

}  // namespace galois
