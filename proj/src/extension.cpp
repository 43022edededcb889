#include "galois/extension.hpp"

#include <cstdint>
#include <numeric>

namespace galois {
namespace {

using QElem = TowerElem<Rational>;
using QTowerPoly = Poly<QElem>;
using Bivariate = Poly<QPoly>;  // outer variable x, coefficients in Q[t]

QPoly as_poly_in_x(const std::vector<Rational>& power_coords) { return QPoly(power_coords); }

/// Reduces G(x, t) modulo a monic m(x) with rational coefficients.
Bivariate reduce_in_x(const Bivariate& g, const QPoly& m) {
  std::vector<QPoly> c = g.coefficients();
  const std::size_t n = static_cast<std::size_t>(m.deg());
  for (std::size_t k = c.size(); k-- > n;) {
    if (c[k].is_zero()) continue;
    const QPoly lead = c[k];
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(m[j])) c[k - n + j] -= lead * m[j];
    }
    c[k] = QPoly();
  }
  return Bivariate(std::move(c));
}

// Arithmetic modulo word-size primes for the norm computation.
namespace word {

using u64 = std::uint64_t;

u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
u64 add(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 power(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
  }
  return r;
}

u64 inv(u64 a, u64 p) { return power(a, p - 2, p); }

u64 residue(const Integer& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

u64 residue(const Rational& q, u64 p) { return mul(residue(q.get_num(), p), inv(residue(q.get_den(), p), p), p); }

void trim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Res(a, b) over F_p by the Euclidean recurrence; a and b nonzero.
u64 resultant(std::vector<u64> a, std::vector<u64> b, u64 p) {
  u64 acc = 1;
  for (;;) {
    trim(b);
    if (b.empty()) return 0;
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    if (db == 0) return mul(acc, power(b[0], da, p), p);
    // a mod b
    const u64 lead_inv = inv(b.back(), p);
    for (std::size_t k = a.size(); k-- > db;) {
      const u64 c = mul(a[k], lead_inv, p);
      if (c == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = sub(a[k - db + j], mul(c, b[j], p), p);
    }
    a.resize(db);
    trim(a);
    if (a.empty()) return 0;
    const std::size_t dr = a.size() - 1;
    if ((da * db) % 2 == 1) acc = p - acc;
    acc = mul(acc, power(b.back(), da - dr, p), p);
    std::swap(a, b);
  }
}

/// Coefficients of the polynomial of degree <= n taking values ys at 0..n.
std::vector<u64> interpolate(const std::vector<u64>& ys, u64 p) {
  const std::size_t n = ys.size();
  // Newton divided differences on the nodes 0, 1, ..., n-1.
  std::vector<u64> d = ys;
  for (std::size_t k = 1; k < n; ++k) {
    const u64 kinv = inv(k % p, p);
    for (std::size_t i = n; i-- > k;) d[i] = mul(sub(d[i], d[i - 1], p), kinv, p);
  }
  std::vector<u64> out(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    // out = out * (t - i) + d[i]
    std::vector<u64> next(n, 0);
    for (std::size_t j = 0; j + 1 < n; ++j) next[j + 1] = out[j];
    for (std::size_t j = 0; j < n; ++j) next[j] = sub(next[j], mul(out[j], i % p, p), p);
    next[0] = add(next[0], d[i], p);
    out = std::move(next);
  }
  return out;
}

/// Degree of gcd(a, b) over F_p.
std::size_t gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::size_t db = b.size() - 1;
    const u64 lead_inv = inv(b.back(), p);
    for (std::size_t k = a.size(); k-- > db;) {
      const u64 c = mul(a[k], lead_inv, p);
      if (c == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = sub(a[k - db + j], mul(c, b[j], p), p);
    }
    if (a.size() > db) a.resize(db);
    trim(a);
    std::swap(a, b);
  }
  return a.size() - 1;
}

/// Primes below 2^62 in decreasing order.
class Primes {
 public:
  u64 next() {
    do {
      candidate_ -= 2;
    } while (mpz_probab_prime_p(candidate_.get_mpz_t(), 30) == 0);
    return mpz_get_ui(candidate_.get_mpz_t());
  }

 private:
  Integer candidate_ = (Integer(1) << 62) + 1;
};

}  // namespace word

Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Integer norm1(const std::vector<Rational>& v, const Integer& scale) {
  Integer s = 0;
  for (const auto& c : v) s += abs(Integer(c.get_num() * (scale / c.get_den())));
  return s;
}

/// N(t) = Res_x(m(x), G(x, t)) for G = g(t - s x) mod m, scaled by a
/// nonzero integer so that it is integral. Images modulo word primes come from
/// evaluation in t; the exact value from Chinese remaindering until the prime
/// product exceeds twice the l1 bound of the integral Sylvester determinant.
class Norm {
 public:
  Norm(const std::vector<QPoly>& g, const QPoly& m, long s) : m_(m) {
    const QPoly t = qpoly({0, 1});
    const Bivariate lin(std::vector<QPoly>{t, QPoly::constant(Rational(-s))});
    for (std::size_t j = g.size(); j-- > 0;) {
      std::vector<QPoly> cj;
      for (const auto& c : g[j].coefficients()) cj.push_back(QPoly::constant(c));
      g_ = reduce_in_x(g_ * lin + Bivariate(std::move(cj)), m);
    }
    if (g_.is_zero()) return;
    n_ = static_cast<std::size_t>(m.deg());
    kx_ = static_cast<std::size_t>(g_.deg());
    std::size_t kt = 0;
    std::vector<Rational> all;
    for (const auto& c : g_.coefficients()) {
      if (!c.is_zero()) kt = std::max(kt, static_cast<std::size_t>(c.deg()));
      all.insert(all.end(), c.coefficients().begin(), c.coefficients().end());
    }
    points_ = n_ * kt + 1;
    den_m_ = lcm_of_denominators(m.coefficients());
    den_g_ = lcm_of_denominators(all);
    Integer row_g = 0;
    for (const auto& c : g_.coefficients()) row_g += norm1(c.coefficients(), den_g_);
    const Integer row_m = norm1(m.coefficients(), den_m_);
    bound_bits_ = kx_ * mpz_sizeinbase(row_m.get_mpz_t(), 2) + n_ * mpz_sizeinbase(row_g.get_mpz_t(), 2) + 2;
  }

  bool is_zero() const { return g_.is_zero(); }

  /// Usable primes divide no denominator.
  bool usable(word::u64 p) const { return word::residue(den_m_, p) != 0 && word::residue(den_g_, p) != 0; }

  /// Coefficients of the scaled norm modulo a usable prime.
  std::vector<word::u64> image(word::u64 p) const {
    std::vector<word::u64> mp;
    for (const auto& c : m_.coefficients()) mp.push_back(word::residue(c, p));
    std::vector<std::vector<word::u64>> gp;  // gp[j][i]: coefficient of x^j t^i
    for (const auto& c : g_.coefficients()) {
      std::vector<word::u64> row;
      for (const auto& q : c.coefficients()) row.push_back(word::residue(q, p));
      gp.push_back(std::move(row));
    }
    const word::u64 scale =
        word::mul(word::power(word::residue(den_m_, p), kx_, p), word::power(word::residue(den_g_, p), n_, p), p);
    std::vector<word::u64> values;
    values.reserve(points_);
    for (std::size_t t0 = 0; t0 < points_; ++t0) {
      std::vector<word::u64> b;
      for (const auto& row : gp) {
        word::u64 v = 0;
        for (std::size_t i = row.size(); i-- > 0;) v = word::add(word::mul(v, t0, p), row[i], p);
        b.push_back(v);
      }
      values.push_back(word::mul(word::resultant(mp, b, p), scale, p));
    }
    return word::interpolate(values, p);
  }

  /// The scaled norm, reusing images already computed.
  ZPoly exact(std::vector<std::pair<word::u64, std::vector<word::u64>>> images) const {
    std::vector<Integer> crt(points_, 0);
    Integer modulus = 1;
    word::Primes primes;
    std::size_t used = 0;
    while (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= bound_bits_) {
      word::u64 p;
      std::vector<word::u64> coeffs;
      if (used < images.size()) {
        p = images[used].first;
        coeffs = std::move(images[used].second);
        ++used;
      } else {
        do {
          p = primes.next();
        } while (!usable(p) || seen(images, p));
        coeffs = image(p);
      }
      const Integer P(static_cast<unsigned long>(p));
      Integer m_inv;
      mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
      for (std::size_t i = 0; i < points_; ++i) {
        Integer diff = (Integer(static_cast<unsigned long>(coeffs[i])) - crt[i]) * m_inv;
        mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), P.get_mpz_t());
        crt[i] += modulus * diff;
      }
      modulus *= P;
    }
    const Integer half = modulus / 2;
    for (auto& c : crt) {
      if (c > half) c -= modulus;
    }
    return ZPoly(std::move(crt));
  }

 private:
  static bool seen(const std::vector<std::pair<word::u64, std::vector<word::u64>>>& images, word::u64 p) {
    for (const auto& im : images) {
      if (im.first == p) return true;
    }
    return false;
  }

  QPoly m_;
  Bivariate g_;
  std::size_t n_ = 0, kx_ = 0, points_ = 0, bound_bits_ = 0;
  Integer den_m_, den_g_;
};

/// The norm when some prime image proves it squarefree: a squarefree image
/// of full degree forces the integer polynomial to be squarefree.
std::optional<ZPoly> squarefree_norm(const std::vector<QPoly>& g, const QPoly& m, long s) {
  const Norm norm(g, m, s);
  if (norm.is_zero()) return std::nullopt;
  word::Primes primes;
  for (int attempt = 0; attempt < 2; ++attempt) {
    word::u64 p;
    do {
      p = primes.next();
    } while (!norm.usable(p));
    auto im = norm.image(p);
    if (im.empty() || im.back() == 0) continue;
    std::vector<word::u64> d;
    for (std::size_t i = 1; i < im.size(); ++i) d.push_back(word::mul(im[i], i % p, p));
    if (word::gcd_degree(im, d, p) == 0) return norm.exact({{p, std::move(im)}});
  }
  return std::nullopt;
}

/// h(t + shift) mod g by Horner, never forming the full composition.
QTowerPoly shifted_mod(const QPoly& h, const QTowerPoly& lin, const QTowerPoly& g, const TowerPtr<Rational>& tower) {
  QTowerPoly acc;
  for (std::size_t j = h.coefficients().size(); j-- > 0;) {
    acc = rem(acc * lin + QTowerPoly::constant(tower->from_base(h[j])), g);
  }
  return acc;
}

/// Trager on a monic squarefree g of degree >= 2 over a tower of Q.
std::vector<QTowerPoly> trager(const QTowerPoly& g, const TowerPtr<Rational>& tower) {
  const PrimitiveElement<Rational>& pe = tower->primitive();
  const QPoly& m = pe.min_poly;

  // The norm is taken in the primitive-element model; the gcds stay in the
  // tower, whose coordinates are much smaller.
  std::vector<QPoly> gx;
  for (const auto& c : g.coefficients()) gx.push_back(as_poly_in_x(pe.to_power_basis.apply(tower->embed(c).coords())));
  const QElem theta = tower->embed(pe.element);

  for (long k = 0; k <= 64; ++k) {
    const long s = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    const auto n = squarefree_norm(gx, m, s);
    if (!n) continue;
    std::vector<QTowerPoly> found;
    const QTowerPoly shift_lin(std::vector<QElem>{theta * Rational(s), tower->one()});
    const auto norm_factors = factor_squarefree_z(content_primitive(to_rational(*n)).primitive);
    // Each norm factor accounts for one factor of g; the cofactor of the
    // others is the last one.
    QTowerPoly rest = g;
    for (std::size_t i = 0; i < norm_factors.size(); ++i) {
      if (i + 1 == norm_factors.size()) {
        if (rest.deg() >= 1) found.push_back(std::move(rest));
        break;
      }
      QTowerPoly d = gcd(rest, shifted_mod(to_rational(norm_factors[i]), shift_lin, rest, tower));
      check_invariant(d.deg() >= 1, "trager: norm factor without a matching factor");
      rest = exact_quotient(rest, d);
      found.push_back(std::move(d));
    }
    int total = 0;
    for (const auto& f : found) total += f.deg();
    check_invariant(total == g.deg(), "trager: factor degrees do not add up");
    return found;
  }
  fail(ErrorKind::SearchExhausted, "no squarefree norm found for shifts up to 32");
}

Factorization<QElem> factor_rational_tower(const QTowerPoly& f, const TowerPtr<Rational>& tower,
                                           const FactorLimits& limits) {
  Factorization<QElem> result;
  result.unit = f.leading();
  if (f.deg() == 0) return result;
  if (tower->depth() == 0) {
    std::vector<Rational> v;
    for (const auto& c : f.coefficients()) v.push_back(c.base_value());
    FactorLimits l = limits;
    l.max_degree = limits.max_norm_degree;
    auto fq = factor_q(QPoly(std::move(v)), l);
    for (const auto& [g, mult] : fq.factors) result.factors.emplace_back(tower->embed_base(g), mult);
    result.canonicalize();
    return result;
  }
  for (const auto& [part, mult] : squarefree_char0(f)) {
    if (part.deg() == 1) {
      result.factors.emplace_back(part, mult);
      continue;
    }
    const std::size_t norm_degree = static_cast<std::size_t>(part.deg()) * tower->degree();
    if (norm_degree > static_cast<std::size_t>(limits.max_norm_degree)) {
      fail(ErrorKind::DegreeCap, "norm degree " + std::to_string(norm_degree) + " exceeds cap " +
                                     std::to_string(limits.max_norm_degree));
    }
    for (auto& g : trager(part, tower)) result.factors.emplace_back(monic(g), mult);
  }
  result.canonicalize();
  return result;
}

}  // namespace

template <class K>
Factorization<TowerElem<K>> factor_over_extension(const Poly<TowerElem<K>>& f, const TowerPtr<K>& tower,
                                                  const FactorLimits& limits) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of the zero polynomial");
  const Poly<TowerElem<K>> g = tower->embed(f);
  if constexpr (std::is_same_v<K, Rational>) {
    return factor_rational_tower(g, tower, limits);
  } else {
    return factor_finite_field(g);
  }
}

template <class K>
Adjoined<K> adjoin_root(const TowerPtr<K>& tower, const Poly<TowerElem<K>>& m, std::string label,
                        const AdjoinOptions& options) {
  if (m.is_zero()) fail(ErrorKind::ZeroPolynomial, "adjoining a root of the zero polynomial");
  if (m.deg() < 1) fail(ErrorKind::ConstantPolynomial, "adjoining a root of a constant");
  const Poly<TowerElem<K>> mm = tower->embed(m);
  if (!mm.is_monic()) fail(ErrorKind::NotMonic, "defining polynomial must be monic");
  if (!options.certified && mm.deg() > 1) {
    bool irreducible = false;
    if constexpr (std::is_same_v<K, Rational>) {
      bool base_coeffs = true;
      for (const auto& c : mm.coefficients()) base_coeffs = base_coeffs && c.is_base();
      const std::size_t dm = static_cast<std::size_t>(mm.deg());
      if (base_coeffs && std::gcd(dm, tower->degree()) == 1) {
        // Irreducible over Q with degree coprime to [L:Q] stays irreducible over L.
        std::vector<Rational> v;
        for (const auto& c : mm.coefficients()) v.push_back(c.base_value());
        FactorLimits l = options.limits;
        l.max_degree = l.max_norm_degree;
        irreducible = is_irreducible_q(QPoly(std::move(v)), l).verdict == Verdict::Irreducible;
      } else {
        irreducible = factor_over_extension(mm, tower, options.limits).is_irreducible();
      }
    } else {
      irreducible = is_irreducible_finite(mm);
    }
    if (!irreducible) fail(ErrorKind::NotIrreducible, "defining polynomial is reducible over the tower");
  }
  auto next = Tower<K>::extend(tower, mm, std::move(label));
  return {next, next->generator(next->depth())};
}

template Factorization<TowerElem<Rational>> factor_over_extension(const Poly<TowerElem<Rational>>&,
                                                                  const TowerPtr<Rational>&, const FactorLimits&);
template Factorization<TowerElem<FpScalar>> factor_over_extension(const Poly<TowerElem<FpScalar>>&,
                                                                  const TowerPtr<FpScalar>&, const FactorLimits&);
template Adjoined<Rational> adjoin_root(const TowerPtr<Rational>&, const Poly<TowerElem<Rational>>&, std::string,
                                        const AdjoinOptions&);
template Adjoined<FpScalar> adjoin_root(const TowerPtr<FpScalar>&, const Poly<TowerElem<FpScalar>>&, std::string,
                                        const AdjoinOptions&);

}  // namespace galois
