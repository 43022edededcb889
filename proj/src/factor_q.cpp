#include <algorithm>
#include <set>

#include "galois/factor.hpp"

namespace galois {
namespace {

// Polynomials over Z/m as low-first coefficient vectors in [0, m).
using ModPoly = std::vector<Integer>;

void trim(ModPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ModPoly reduce(const ModPoly& a, const Integer& m) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

ModPoly from_z(const ZPoly& f, const Integer& m) { return reduce(f.coefficients(), m); }

ModPoly add(const ModPoly& a, const ModPoly& b, const Integer& m) {
  ModPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return reduce(r, m);
}

ModPoly sub(const ModPoly& a, const ModPoly& b, const Integer& m) {
  ModPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return reduce(r, m);
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return reduce(r, m);
}

ModPoly scale(const ModPoly& a, const Integer& c, const Integer& m) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return reduce(r, m);
}

/// a = q*b + r over Z/m with b monic.
std::pair<ModPoly, ModPoly> divmod_monic(ModPoly a, const ModPoly& b, const Integer& m) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {{}, a};
  ModPoly q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), a[k].get_mpz_t(), m.get_mpz_t());
    q[k - db] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[k - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  a.resize(db);
  return {reduce(q, m), reduce(a, m)};
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  check_invariant(mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0, "Hensel: leading coefficient not invertible");
  return r;
}

ModPoly to_modular(const FpPoly& f) {
  ModPoly r;
  for (const auto& c : f.coefficients()) r.emplace_back(static_cast<unsigned long>(c.residue()));
  return r;
}

/// Coefficients in (-m/2, m/2].
ZPoly symmetric(const ModPoly& a, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> v;
  v.reserve(a.size());
  for (const auto& c : a) v.push_back(c > half ? Integer(c - m) : c);
  return ZPoly(std::move(v));
}

struct Lifted {
  ModPoly g, h, s, t;
};

/// One quadratic Hensel step: from f = g h, s g + t h = 1 mod m to the same
/// identities mod m^2 (h monic).
Lifted hensel_step(const Integer& m, const ModPoly& f, const Lifted& in) {
  const Integer mm = m * m;
  const ModPoly e = sub(reduce(f, mm), mul(in.g, in.h, mm), mm);
  auto [q, r] = divmod_monic(mul(in.s, e, mm), in.h, mm);
  Lifted out;
  out.g = add(add(in.g, mul(in.t, e, mm), mm), mul(q, in.g, mm), mm);
  out.h = add(in.h, r, mm);
  ModPoly b = sub(add(mul(in.s, out.g, mm), mul(in.t, out.h, mm), mm), ModPoly{Integer(1)}, mm);
  auto [c, d] = divmod_monic(mul(in.s, b, mm), out.h, mm);
  out.s = sub(in.s, d, mm);
  out.t = sub(sub(in.t, mul(in.t, b, mm), mm), mul(c, out.g, mm), mm);
  return out;
}

/// Lifts f = lc * prod(factors) from mod p to mod p^k. Factors are monic.
std::vector<ModPoly> multifactor_lift(const ModPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
                                      const Integer& pk) {
  const Integer P(static_cast<unsigned long>(p));
  if (factors.size() == 1) {
    const Integer inv = inverse_mod(f.back(), pk);
    return {scale(f, inv, pk)};
  }
  const std::size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  FpPoly gl = FpPoly::constant(FpScalar(0, p) + FpScalar(static_cast<std::int64_t>(mpz_fdiv_ui(f.back().get_mpz_t(), p)), p));
  for (const auto& u : left) gl = gl * u;
  FpPoly hr = FpPoly::constant(FpScalar(1, p));
  for (const auto& u : right) hr = hr * u;
  auto bz = gcd_ext(gl, hr);
  check_invariant(bz.d.deg() == 0, "Hensel: modular factors not coprime");
  Lifted cur{to_modular(gl), to_modular(hr), to_modular(bz.a), to_modular(bz.b)};
  Integer m = P;
  while (m < pk) {
    cur = hensel_step(m, f, cur);
    m *= m;
  }
  ModPoly g = reduce(cur.g, pk);
  ModPoly h = reduce(cur.h, pk);
  auto out = multifactor_lift(g, left, p, pk);
  auto rhs = multifactor_lift(h, right, p, pk);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

Integer norm2_ceil(const ZPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coefficients()) s += c * c;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

/// Exact quotient f/g in Z[t] if g divides f.
std::optional<ZPoly> divide_z(const ZPoly& f, const ZPoly& g) {
  auto [q, r] = divmod(to_rational(f), to_rational(g));
  if (!r.is_zero()) return std::nullopt;
  std::vector<Integer> v;
  for (const auto& c : q.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return ZPoly(std::move(v));
}

/// Degrees achievable as sums of subsets of `degs`.
std::vector<bool> subset_sums(const std::vector<int>& degs, int total) {
  std::vector<bool> ok(static_cast<std::size_t>(total) + 1, false);
  ok[0] = true;
  for (int d : degs) {
    for (int s = total; s >= d; --s) {
      if (ok[static_cast<std::size_t>(s - d)]) ok[static_cast<std::size_t>(s)] = true;
    }
  }
  return ok;
}

struct ModularImage {
  std::uint64_t p;
  std::vector<FpPoly> factors;
};

std::vector<ZPoly> zassenhaus(ZPoly f) {
  std::vector<ZPoly> found;
  const int n = f.deg();
  if (n <= 1) return {f};

  // Choose the prime with the fewest modular factors among the first few
  // good ones, and keep the degree patterns to prune recombination.
  std::vector<ModularImage> images;
  std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
  for (std::uint64_t p : primes_up_to(100000)) {
    if (images.size() >= 7) break;
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
    FpPoly fp = reduce_mod(f, p);
    if (fp.deg() != n) continue;
    if (gcd(fp, derivative(fp)).deg() > 0) continue;
    auto fac = factor_fp(fp);
    ModularImage img{p, {}};
    std::vector<int> degs;
    for (const auto& [u, mult] : fac.factors) {
      img.factors.push_back(u);
      degs.push_back(u.deg());
    }
    auto sums = subset_sums(degs, n);
    for (int d = 0; d <= n; ++d) allowed[static_cast<std::size_t>(d)] = allowed[static_cast<std::size_t>(d)] && sums[static_cast<std::size_t>(d)];
    images.push_back(std::move(img));
    if (images.back().factors.size() == 1) return {f};
  }
  check_invariant(!images.empty(), "zassenhaus: no good prime found");
  bool only_trivial = true;
  for (int d = 1; d < n; ++d) only_trivial = only_trivial && !allowed[static_cast<std::size_t>(d)];
  if (only_trivial) return {f};

  const ModularImage& best = *std::min_element(images.begin(), images.end(), [](const auto& a, const auto& b) {
    return a.factors.size() < b.factors.size();
  });
  const std::uint64_t p = best.p;
  const Integer P(static_cast<unsigned long>(p));

  const Integer lc = f.leading();
  Integer abs_lc = abs(lc);
  Integer bound = abs_lc * norm2_ceil(f);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
  Integer pk = P;
  while (pk <= bound) pk *= P;

  std::vector<ModPoly> u = multifactor_lift(from_z(f, pk), best.factors, p, pk);
  std::vector<int> deg_of;
  for (const auto& x : u) deg_of.push_back(static_cast<int>(x.size()) - 1);

  ZPoly rest = f;
  std::vector<std::size_t> live(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) live[i] = i;

  for (std::size_t k = 1; 2 * k <= live.size(); ++k) {
    bool restart = true;
    while (restart) {
      restart = false;
      if (2 * k > live.size()) break;
      const Integer rest_lc = rest.leading();
      const Integer target0 = rest_lc * rest[0];
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        int d = 0;
        for (auto i : idx) d += deg_of[live[i]];
        if (allowed[static_cast<std::size_t>(d)] && d < rest.deg()) {
          // Constant-term test before forming the product.
          Integer c0 = rest_lc;
          for (auto i : idx) {
            const ModPoly& ui = u[live[i]];
            c0 = c0 * (ui.empty() ? Integer(0) : ui[0]);
            mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), pk.get_mpz_t());
          }
          if (c0 > pk / 2) c0 -= pk;
          if (sgn(c0) != 0 && mpz_divisible_p(target0.get_mpz_t(), c0.get_mpz_t())) {
            ModPoly prod{Integer(rest_lc)};
            prod = reduce(prod, pk);
            for (auto i : idx) prod = mul(prod, u[live[i]], pk);
            ZPoly g = primitive_part(symmetric(prod, pk));
            if (auto q = divide_z(rest, g)) {
              found.push_back(g);
              rest = *q;
              std::vector<std::size_t> next;
              std::set<std::size_t> used(idx.begin(), idx.end());
              for (std::size_t i = 0; i < live.size(); ++i) {
                if (!used.count(i)) next.push_back(live[i]);
              }
              live = std::move(next);
              restart = true;
              break;
            }
          }
        }
        // Next combination in lexicographic order.
        std::size_t pos = k;
        while (pos-- > 0) {
          if (idx[pos] < live.size() - k + pos) break;
          if (pos == 0) {
            pos = k;
            break;
          }
        }
        if (pos == k || idx[pos] >= live.size() - k + pos) break;
        ++idx[pos];
        for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  if (rest.deg() > 0) found.push_back(primitive_part(rest));
  return found;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of the zero polynomial");
  std::vector<ZPoly> out;
  ZPoly g = primitive_part(f);
  // Pull out powers of t so the constant-term test is meaningful.
  if (g.deg() >= 1 && sgn(g[0]) == 0) {
    out.push_back(zpoly({0, 1}));
    std::vector<Integer> v(g.coefficients().begin() + 1, g.coefficients().end());
    g = ZPoly(std::move(v));
  }
  if (g.deg() >= 1) {
    auto parts = zassenhaus(g);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

bool is_squarefree_q(const QPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree test of the zero polynomial");
  if (f.deg() <= 1) return true;
  const ZPoly g = content_primitive(f).primitive;
  int tried = 0;
  for (std::uint64_t p : primes_up_to(1000)) {
    if (tried == 8) break;
    if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) continue;
    ++tried;
    const FpPoly gp = reduce_mod(g, p);
    if (gcd(gp, derivative(gp)).deg() == 0) return true;
  }
  return gcd(f, derivative(f)).deg() == 0;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of the zero polynomial");
  std::vector<std::pair<QPoly, int>> out;
  if (f.deg() == 0) return out;
  if (is_squarefree_q(f)) {
    out.emplace_back(monic(f), 1);
    return out;
  }
  // Yun's algorithm.
  const QPoly a = monic(f);
  const QPoly da = derivative(a);
  QPoly b = gcd(a, da);
  QPoly c = exact_quotient(a, b);
  QPoly d = exact_quotient(da, b) - derivative(c);
  int i = 1;
  while (c.deg() > 0) {
    QPoly g = gcd(c, d);
    if (g.deg() > 0) out.emplace_back(g, i);
    c = exact_quotient(c, g);
    d = exact_quotient(d, g) - derivative(c);
    ++i;
  }
  return out;
}

Factorization<Rational> factor_q(const QPoly& f, const FactorLimits& limits) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "factor of the zero polynomial");
  if (f.deg() > limits.max_degree) {
    fail(ErrorKind::DegreeCap, "degree " + std::to_string(f.deg()) + " exceeds factorization cap " +
                                   std::to_string(limits.max_degree));
  }
  Factorization<Rational> result;
  result.unit = f.leading();
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& g : factor_squarefree_z(content_primitive(part).primitive)) {
      result.factors.emplace_back(monic(to_rational(g)), mult);
    }
  }
  result.canonicalize();
  return result;
}

ZPoly cyclotomic_p(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return ZPoly(std::vector<Integer>(p, Integer(1)));
}

}  // namespace galois
