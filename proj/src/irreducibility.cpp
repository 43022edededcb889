#include <algorithm>

#include "galois/factor.hpp"

namespace galois {
namespace {

/// Positive divisors of |n| for n != 0, by trial division.
std::vector<Integer> integer_divisors(const Integer& n, std::uint64_t cap) {
  Integer m = abs(n);
  if (!mpz_fits_ulong_p(m.get_mpz_t())) fail(ErrorKind::Budget, "coefficient too large for divisor enumeration");
  std::vector<Integer> out;
  for (auto d : divisors(mpz_get_ui(m.get_mpz_t()), cap)) out.emplace_back(static_cast<unsigned long>(d));
  return out;
}

/// Rational root test by the candidate list p/q with p | a_0, q | a_n.
std::vector<Rational> rational_roots_by_candidates(const ZPoly& f, std::uint64_t cap) {
  std::vector<Rational> roots;
  ZPoly g = f;
  if (sgn(g[0]) == 0) {
    roots.emplace_back(0);
    std::size_t k = 0;
    while (sgn(g[k]) == 0) ++k;
    g = ZPoly(std::vector<Integer>(g.coefficients().begin() + static_cast<long>(k), g.coefficients().end()));
  }
  if (g.deg() == 0) return roots;
  const QPoly gq = to_rational(g);
  for (const auto& p : integer_divisors(g[0], cap)) {
    for (const auto& q : integer_divisors(g.leading(), cap)) {
      for (int s : {1, -1}) {
        Rational r = make_rational(Integer(s * p), q);
        if (is_zero(eval(gq, r)) && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

bool eisenstein_conditions(const ZPoly& f, std::uint64_t p) {
  if (f.is_zero() || f.deg() < 1) return false;
  const int n = f.deg();
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) return false;
  for (int i = 0; i < n; ++i) {
    if (!mpz_divisible_ui_p(f[static_cast<std::size_t>(i)].get_mpz_t(), p)) return false;
  }
  const Integer p2 = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
  return !mpz_divisible_p(f[0].get_mpz_t(), p2.get_mpz_t());
}

std::optional<EisensteinWitness> eisenstein(const ZPoly& f, std::span<const long> shifts, std::uint64_t cap) {
  if (f.is_zero() || f.deg() < 1) return std::nullopt;
  for (long c : shifts) {
    const ZPoly g = shift(f, Integer(c));
    if (sgn(g[0]) == 0) continue;
    Integer common = 0;
    for (int i = 0; i < g.deg(); ++i) mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), g[static_cast<std::size_t>(i)].get_mpz_t());
    if (common <= 1) continue;
    if (!mpz_fits_ulong_p(common.get_mpz_t()) || mpz_get_ui(common.get_mpz_t()) > cap) continue;
    for (auto p : prime_divisors(mpz_get_ui(common.get_mpz_t()), cap)) {
      if (eisenstein_conditions(g, p)) return EisensteinWitness{p, c};
    }
  }
  return std::nullopt;
}

bool mod_p_witness_holds(const ZPoly& f, std::uint64_t p) {
  if (f.is_zero() || f.deg() < 1 || !is_prime(p)) return false;
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) return false;
  const FpPoly fp = reduce_mod(f, p);
  try {
    return factor_fp_trial_division(fp).is_irreducible();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Budget) throw;
    return is_irreducible_fp(fp);
  }
}

std::optional<std::uint64_t> mod_p_certificate(const ZPoly& f, std::uint64_t prime_bound) {
  if (f.is_zero() || f.deg() < 1) return std::nullopt;
  for (auto p : primes_up_to(prime_bound)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    if (is_irreducible_fp(reduce_mod(f, p))) return p;
  }
  return std::nullopt;
}

std::string witness_kind(const IrreducibilityWitness& w) {
  struct Namer {
    std::string operator()(const LowDegreeRule&) const { return "low_degree"; }
    std::string operator()(const RationalRootWitness&) const { return "rational_root"; }
    std::string operator()(const EisensteinWitness&) const { return "eisenstein"; }
    std::string operator()(const ModPWitness&) const { return "mod_p"; }
    std::string operator()(const FullFactorizationWitness&) const { return "factorization"; }
  };
  return std::visit(Namer{}, w);
}

std::vector<Rational> rational_roots(const QPoly& f, const FactorLimits&) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Rational> roots;
  if (f.deg() == 0) return roots;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& g : factor_squarefree_z(content_primitive(part).primitive)) {
      if (g.deg() == 1) roots.push_back(make_rational(-g[0], g[1]));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

IrreducibilityCertificate is_irreducible_q(const QPoly& f, const FactorLimits& limits) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "irreducibility of the zero polynomial");
  const int n = f.deg();
  if (n == 0) fail(ErrorKind::ConstantPolynomial, "constants are neither reducible nor irreducible");
  if (n == 1) return {Verdict::Irreducible, LowDegreeRule{1}};
  const ZPoly prim = content_primitive(f).primitive;
  if (n <= 3) {
    auto roots = rational_roots(f, limits);
    if (!roots.empty()) return {Verdict::Reducible, RationalRootWitness{roots.front()}};
    return {Verdict::Irreducible, LowDegreeRule{n}};
  }
  std::vector<long> shifts{0};
  for (long c = 1; c <= limits.eisenstein_shift_bound; ++c) {
    shifts.push_back(c);
    shifts.push_back(-c);
  }
  if (auto w = eisenstein(prim, shifts, limits.trial_division_cap)) return {Verdict::Irreducible, *w};
  if (auto p = mod_p_certificate(prim, limits.mod_p_prime_bound)) return {Verdict::Irreducible, ModPWitness{*p}};
  auto fac = factor_q(f, limits);
  const Verdict v = fac.is_irreducible() ? Verdict::Irreducible : Verdict::Reducible;
  return {v, FullFactorizationWitness{std::move(fac)}};
}

bool verify_certificate(const QPoly& f, const IrreducibilityCertificate& cert) {
  if (f.is_zero() || f.deg() < 1) return false;
  const ZPoly prim = content_primitive(f).primitive;
  struct Checker {
    const QPoly& f;
    const ZPoly& prim;
    Verdict verdict;
    bool operator()(const LowDegreeRule& w) const {
      if (verdict != Verdict::Irreducible || w.degree != f.deg()) return false;
      if (w.degree == 1) return true;
      if (w.degree > 3) return false;
      return rational_roots_by_candidates(prim, kDefaultTrialDivisionCap).empty();
    }
    bool operator()(const RationalRootWitness& w) const {
      return verdict == Verdict::Reducible && f.deg() >= 2 && is_zero(eval(f, w.root));
    }
    bool operator()(const EisensteinWitness& w) const {
      return verdict == Verdict::Irreducible && is_prime(w.prime) &&
             eisenstein_conditions(shift(prim, Integer(w.shift)), w.prime);
    }
    bool operator()(const ModPWitness& w) const {
      return verdict == Verdict::Irreducible && mod_p_witness_holds(prim, w.prime);
    }
    bool operator()(const FullFactorizationWitness& w) const {
      if (!(w.factorization.expand() == f)) return false;
      const bool single = w.factorization.is_irreducible();
      return single == (verdict == Verdict::Irreducible);
    }
  };
  return std::visit(Checker{f, prim, cert.verdict}, cert.witness);
}

}  // namespace galois
