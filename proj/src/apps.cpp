#include "galois/apps.hpp"

#include "galois/galois.hpp"

namespace galois {
namespace {

int sign_at_infinity(const QPoly& f, bool negative) {
  const int s = sgn(f.leading());
  return (negative && f.deg() % 2 == 1) ? -s : s;
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& g : chain) signs.push_back(sgn(eval(g, x)));
  return variations(signs);
}

std::size_t factorial(std::uint64_t n) {
  std::size_t out = 1;
  for (std::uint64_t k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace

std::vector<QPoly> sturm_chain(const QPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "Sturm chain of the zero polynomial");
  QPoly g = exact_quotient(f, gcd(f, derivative(f)));
  std::vector<QPoly> chain{g};
  if (g.deg() == 0) return chain;
  chain.push_back(derivative(g));
  while (chain.back().deg() > 0) {
    QPoly r = -rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int count_real_roots(const QPoly& f) {
  const auto chain = sturm_chain(f);
  std::vector<int> low, high;
  for (const auto& g : chain) {
    low.push_back(sign_at_infinity(g, true));
    high.push_back(sign_at_infinity(g, false));
  }
  return variations(low) - variations(high);
}

int count_real_roots_between(const QPoly& f, const Rational& a, const Rational& b) {
  const auto chain = sturm_chain(f);
  return variations_at(chain, a) - variations_at(chain, b);
}

std::optional<std::uint64_t> sp_criterion(const QPoly& f) {
  if (f.is_zero() || f.deg() < 2) return std::nullopt;
  const auto p = static_cast<std::uint64_t>(f.deg());
  if (!is_prime(p)) return std::nullopt;
  if (is_irreducible_q(f).verdict != Verdict::Irreducible) return std::nullopt;
  if (count_real_roots(f) != static_cast<int>(p) - 2) return std::nullopt;
  return p;
}

std::string evidence_name(Evidence e) {
  switch (e) {
    case Evidence::SpCriterion:
      return "SpCriterion";
    case Evidence::DegreeBound:
      return "DegreeBound";
    case Evidence::GroupComputed:
      return "GroupComputed";
  }
  return "";
}

QPoly depressed(const QPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "depressing the zero polynomial");
  const QPoly g = monic(f);
  if (g.deg() < 2) return g;
  const Rational c = -g[static_cast<std::size_t>(g.deg() - 1)] / Rational(g.deg());
  return shift(g, c);
}

SolvabilityVerdict solvable_by_group(const QPoly& f, const SplittingLimits& limits) {
  const SplittingField<Rational> sf = splitting_field_q(depressed(f), limits);
  const GaloisGroup<Rational> g = automorphisms(sf);
  SolvabilityVerdict v{f, g.group().is_solvable(), Evidence::GroupComputed};
  v.group_type = isomorphism_type(g);
  v.group_order = g.order();
  for (const auto& h : g.group().derived_series()) v.derived_series.push_back(h.order());
  return v;
}

SolvabilityVerdict solvable_by_radicals(const QPoly& f, const SplittingLimits& limits) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "solvability of the zero polynomial");
  if (const auto p = sp_criterion(f); p && *p >= 5) {
    SolvabilityVerdict v{f, false, Evidence::SpCriterion};
    v.prime = *p;
    v.real_roots = static_cast<int>(*p) - 2;
    v.group_type = "S" + std::to_string(*p);
    v.group_order = factorial(*p);
    return v;
  }
  if (f.deg() <= 4) return SolvabilityVerdict{f, true, Evidence::DegreeBound};
  return solvable_by_group(f, limits);
}

bool KummerReport::ok() const {
  for (const auto& c : cyclotomic) {
    if (!c.abelian) return false;
  }
  for (const auto& k : radical) {
    if (!k.abelian) return false;
  }
  return true;
}

KummerReport kummer_abelian_checks(int max_n, const std::vector<std::pair<int, long>>& pairs) {
  KummerReport report;
  for (int n = 1; n <= max_n; ++n) {
    QPoly f = QPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - QPoly::constant(Rational(1));
    const GaloisGroup<Rational> g = automorphisms(splitting_field_q(f));
    report.cyclotomic.push_back({n, g.order(), g.group().is_abelian()});
  }
  for (const auto& [n, a] : pairs) {
    QPoly f = QPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - QPoly::constant(Rational(a));
    const GaloisGroup<Rational> g = automorphisms(splitting_field_q(f));
    const auto& roots = g.roots();
    std::vector<TowerElem<Rational>> unity;
    for (const auto& r : roots) unity.push_back(r / roots.front());
    const Subfield<Rational> base = subfield_generated(g.tower(), unity);
    const Subgroup h = gal_over(base, g);
    report.radical.push_back({n, a, base.dim(), h.order(), g.group().restrict_to(h).is_abelian()});
  }
  return report;
}

ConstructibilityVerdict constructible_degree_check(const QPoly& m, std::string target) {
  if (is_irreducible_q(m).verdict != Verdict::Irreducible) {
    fail(ErrorKind::NotIrreducible, to_string(m) + " is not irreducible over Q");
  }
  const int d = m.deg();
  const bool power_of_two = (d & (d - 1)) == 0;
  return {std::move(target), monic(m), d,
          power_of_two ? Constructibility::NecessaryConditionHolds : Constructibility::NotConstructible};
}

bool ngon_constructible(std::uint64_t n) {
  if (n < 3) return false;
  while (n % 2 == 0) n /= 2;
  std::uint64_t last = 0;
  for (auto q : factor_integer(n)) {
    if (q == last || !is_fermat_prime(q)) return false;
    last = q;
  }
  return true;
}

std::vector<ClassicProblem> classic_problems() {
  std::vector<ClassicProblem> out;
  // cos(3x) = 4cos^3(x) - 3cos(x) at x = 20 degrees gives 8c^3 - 6c - 1 = 0.
  auto trisect = constructible_degree_check(qpoly({-1, -6, 0, 8}), "cos(20 degrees)");
  out.push_back({"trisect 60 degrees", trisect.verdict == Constructibility::NotConstructible, trisect, ""});
  auto cube = constructible_degree_check(qpoly({-2, 0, 0, 1}), "cube root of 2");
  out.push_back({"duplicate the cube", cube.verdict == Constructibility::NotConstructible, cube, ""});
  out.push_back({"square the circle", true, std::nullopt, "pi is transcendental over Q"});
  return out;
}

}  // namespace galois
