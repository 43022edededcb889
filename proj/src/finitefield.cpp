#include "galois/finitefield.hpp"

#include "galois/factor.hpp"
#include "galois/galois.hpp"
#include "galois/linalg.hpp"
#include "galois/splitting.hpp"

namespace galois {
namespace {

Integer power_of(std::uint64_t p, unsigned n) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, n);
  return q;
}

void check_budget(std::uint64_t p, unsigned n, std::uint64_t budget, const std::string& what) {
  if (power_of(p, n) > Integer(std::to_string(budget))) {
    fail(ErrorKind::Budget, what + " needs " + std::to_string(p) + "^" + std::to_string(n) +
                                " elements, above the budget " + std::to_string(budget));
  }
}

/// Advance base-p digits, index 0 fastest. False after the last vector.
bool next_digits(std::vector<std::uint64_t>& digits, std::uint64_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

std::vector<GFElem> span_elements(const TowerPtr<FpScalar>& tower, const std::vector<GFElem>& basis) {
  const std::uint64_t p = tower->characteristic();
  std::vector<GFElem> out;
  std::vector<std::uint64_t> digits(basis.size(), 0);
  do {
    GFElem x = tower->zero_element();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (digits[i] != 0) x += basis[i] * FpScalar(static_cast<std::int64_t>(digits[i]), p);
    }
    out.push_back(std::move(x));
  } while (next_digits(digits, p));
  return out;
}

Matrix<FpScalar> frobenius_matrix(const GF& field) {
  std::vector<std::vector<FpScalar>> columns;
  GFElem monomial = field.tower->one();
  for (unsigned j = 0; j < field.n; ++j) {
    columns.push_back(frobenius(monomial).coords());
    monomial = monomial * field.generator();
  }
  return Matrix<FpScalar>::from_columns(columns, field.n, field.tower->zero());
}

}  // namespace

FpPoly find_irreducible(std::uint64_t p, unsigned n, std::uint64_t budget) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorKind::ConstantPolynomial, "field degree must be positive");
  check_budget(p, n, budget, "searching irreducibles of degree " + std::to_string(n));
  // Canonical order compares from the top coefficient down, so the constant
  // term varies fastest.
  std::vector<std::uint64_t> digits(n, 0);
  do {
    std::vector<FpScalar> coeffs;
    for (auto d : digits) coeffs.emplace_back(static_cast<std::int64_t>(d), p);
    coeffs.emplace_back(1, p);
    FpPoly f(std::move(coeffs));
    if (n > 1 && digits[0] == 0) continue;
    if (is_irreducible_fp(f)) return f;
  } while (next_digits(digits, p));
  fail(ErrorKind::InternalInvariant, "no irreducible of degree " + std::to_string(n) + " over F" + std::to_string(p));
}

GFElem GF::generator() const {
  if (tower->depth() == 0) return tower->from_base(-modulus[0]);
  return tower->generator(tower->depth());
}

Integer GF::size() const { return power_of(p, n); }

std::vector<GFElem> GF::elements(std::uint64_t budget) const {
  check_budget(p, n, budget, "listing GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");
  std::vector<GFElem> basis;
  GFElem monomial = tower->one();
  for (unsigned j = 0; j < n; ++j) {
    basis.push_back(monomial);
    monomial = monomial * generator();
  }
  return span_elements(tower, basis);
}

GF gf_with_modulus(const FpPoly& modulus) {
  if (modulus.is_zero()) fail(ErrorKind::ZeroPolynomial, "field modulus is zero");
  if (modulus.degree() < 1) fail(ErrorKind::ConstantPolynomial, "field modulus is constant");
  if (!is_one(modulus.leading())) fail(ErrorKind::NotMonic, "field modulus must be monic");
  if (!is_irreducible_fp(modulus)) fail(ErrorKind::NotIrreducible, to_string(modulus) + " is reducible");
  const std::uint64_t p = modulus.leading().modulus();
  auto base = Tower<FpScalar>::base(FpScalar(0, p));
  const unsigned n = static_cast<unsigned>(modulus.deg());
  auto tower = n == 1 ? base : Tower<FpScalar>::simple(base, modulus, "a");
  return GF{p, n, modulus, tower};
}

GF gf(std::uint64_t p, unsigned n, std::uint64_t budget) { return gf_with_modulus(find_irreducible(p, n, budget)); }

GFElem frobenius(const GFElem& x) { return pow(x, Integer(static_cast<unsigned long>(characteristic(x)))); }

unsigned frobenius_order(const GF& field) {
  const GFElem a = field.generator();
  GFElem x = frobenius(a);
  unsigned m = 1;
  while (x != a) {
    x = frobenius(x);
    ++m;
  }
  return m;
}

GFElem unique_pth_root(const GFElem& x) { return pth_root(x); }

Integer GFSubfield::order() const {
  return basis.empty() ? Integer(0) : power_of(characteristic(basis.front()), degree);
}

std::vector<GFElem> GFSubfield::elements(std::uint64_t budget) const {
  const auto& tower = basis.front().tower();
  check_budget(tower->characteristic(), degree, budget, "listing a subfield");
  return span_elements(tower, basis);
}

std::vector<GFSubfield> subfields(const GF& field, std::uint64_t budget) {
  check_budget(field.p, field.n, budget, "the subfield lattice");
  const Matrix<FpScalar> frob = frobenius_matrix(field);
  const FpScalar one(1, field.p);
  std::vector<GFSubfield> out;
  for (auto m : divisors(field.n)) {
    Matrix<FpScalar> power = Matrix<FpScalar>::identity(field.n, field.tower->zero());
    for (std::uint64_t k = 0; k < m; ++k) power = frob * power;
    for (unsigned i = 0; i < field.n; ++i) power(i, i) -= one;
    GFSubfield sub{static_cast<unsigned>(m), {}};
    for (auto& v : nullspace(power)) sub.basis.push_back(field.tower->element(std::move(v)));
    check_invariant(sub.basis.size() == m, "fixed points of Frobenius^" + std::to_string(m) + " have dimension " +
                                               std::to_string(sub.basis.size()));
    out.push_back(std::move(sub));
  }
  return out;
}

Integer multiplicative_order(const GFElem& x) {
  if (x.is_zero()) fail(ErrorKind::ZeroInverse, "zero has no multiplicative order");
  const Integer q1 = field_order(x) - 1;
  Integer order = q1;
  for (auto r : prime_divisors(q1.get_ui())) {
    while (order % r == 0 && pow(x, Integer(order / r)).is_one()) order /= r;
  }
  return order;
}

GFElem multiplicative_generator(const GF& field, std::uint64_t budget) {
  const Integer q1 = field.size() - 1;
  const auto primes = prime_divisors(q1.get_ui());
  for (const auto& x : field.elements(budget)) {
    if (x.is_zero()) continue;
    bool generates = true;
    for (auto r : primes) {
      if (pow(x, Integer(q1 / r)).is_one()) {
        generates = false;
        break;
      }
    }
    if (generates) return x;
  }
  fail(ErrorKind::InternalInvariant, "multiplicative group has no generator");
}

bool is_primitive_root(long a, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const FpScalar x(a, p);
  if (x.residue() == 0) return false;
  for (auto r : prime_divisors(p - 1)) {
    if (fp_pow(x, (p - 1) / r).residue() == 1) return false;
  }
  return true;
}

FiniteFieldGalois gal_ff(std::uint64_t p, unsigned n, unsigned m) {
  if (m == 0 || n % m != 0) {
    fail(ErrorKind::NotADivisor, std::to_string(m) + " does not divide " + std::to_string(n));
  }
  const GF field = gf(p, n);
  std::vector<GFElem> conjugates{field.generator()};
  for (unsigned i = 1; i < n; ++i) conjugates.push_back(frobenius(conjugates.back()));

  std::vector<Permutation> action;
  for (unsigned k = 0; k < n / m; ++k) {
    Permutation perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = static_cast<int>((i + k * m) % n);
    action.push_back(std::move(perm));
  }
  FiniteGroup group = FiniteGroup::from_permutations(action);
  std::string type = abstract_type(group);
  FiniteFieldGalois out{n / m, m, std::move(action), std::move(group), std::move(type), false, false};

  if (power_of(p, n) <= 4096) {
    const auto sf = splitting_field_fp(field.modulus);
    const GaloisGroup<FpScalar> full = automorphisms(sf);
    out.enumerated = true;
    out.matches_enumeration = full.order() == n && abstract_type(full.group()) == "C" + std::to_string(n);
  }
  return out;
}

}  // namespace galois
