#include <gtest/gtest.h>

#include <map>

#include "galois/factor.hpp"
#include "galois/finitefield.hpp"
#include "support.hpp"

using namespace galois;

namespace {

// Position of x in counting order.
std::size_t index_of(const GFElem& x, std::uint64_t p) {
  std::size_t idx = 0;
  for (std::size_t i = x.coords().size(); i-- > 0;) idx = idx * p + x.coords()[i].residue();
  return idx;
}

int mobius(std::uint64_t n) {
  const auto f = factor_integer(n);
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i] == f[i - 1]) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

// Monic irreducibles of degree d over F_p: (1/d) sum_{e | d} mu(d/e) p^e.
long count_irreducibles(std::uint64_t p, std::uint64_t d) {
  long total = 0;
  for (auto e : divisors(d)) {
    long pe = 1;
    for (std::uint64_t i = 0; i < e; ++i) pe *= static_cast<long>(p);
    total += mobius(d / e) * pe;
  }
  return total / static_cast<long>(d);
}

std::uint64_t ipow(std::uint64_t p, unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < n; ++i) out *= p;
  return out;
}

}  // namespace

TEST(FieldOfFour, TablesMatchTheWorkedExample) {
  const GF f = gf(2, 2);
  EXPECT_EQ(f.modulus, fppoly({1, 1, 1}, 2));
  const auto e = f.elements();
  ASSERT_EQ(e.size(), 4u);
  const GFElem zero = e[0], one = e[1], a = e[2], b = e[3];
  EXPECT_EQ(a, f.generator());
  EXPECT_EQ(b, one + a);
  EXPECT_EQ(a * a, one + a);
  EXPECT_EQ(a * b, one);
  EXPECT_EQ(b * b, a);
  EXPECT_EQ(a + a, zero);
  EXPECT_EQ(a + b, one);
  EXPECT_EQ(frobenius(a), b);
  EXPECT_EQ(frobenius(b), a);
  EXPECT_EQ(frobenius(one), one);
  EXPECT_EQ(unique_pth_root(a), b);
}

TEST(FindIrreducible, SmallExamples) {
  EXPECT_EQ(find_irreducible(2, 2), fppoly({1, 1, 1}, 2));
  EXPECT_EQ(find_irreducible(3, 2), fppoly({1, 0, 1}, 3));
  EXPECT_EQ(find_irreducible(5, 1), fppoly({0, 1}, 5));
}

TEST(FindIrreducible, IsTheLeastIrreducibleInCanonicalOrder) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {5, 2}}) {
    std::optional<FpPoly> least;
    const std::uint64_t count = ipow(p, n);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<FpScalar> c;
      for (std::uint64_t k = code, i = 0; i < n; ++i, k /= p) c.emplace_back(static_cast<std::int64_t>(k % p), p);
      c.emplace_back(1, p);
      const FpPoly g(std::move(c));
      if (!factor_fp_trial_division(g).is_irreducible()) continue;
      if (!least || compare_polys(g, *least) < 0) least = g;
    }
    EXPECT_EQ(find_irreducible(p, n), *least) << p << "^" << n;
  }
}

TEST(FindIrreducible, Errors) {
  try {
    gf(4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
  EXPECT_THROW(gf(2, 0), Error);
  try {
    gf_with_modulus(fppoly({1, 0, 1}, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
  }
  try {
    find_irreducible(2, 30, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Budget);
  }
}

TEST(Elements, EveryElementSatisfiesTheFieldEquation) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {2, 4}, {2, 8}, {2, 12}, {3, 3}, {3, 7}, {5, 2}, {5, 5}, {7, 4}, {13, 3}, {4093, 1}}) {
    const GF f = gf(p, n);
    const auto elems = f.elements();
    ASSERT_EQ(Integer(static_cast<unsigned long>(elems.size())), f.size());
    for (const auto& x : elems) ASSERT_EQ(pow(x, f.size()), x) << p << "^" << n;
  }
}

TEST(Frobenius, AdditiveOnEveryPair) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 4}, {5, 3}, {7, 2}, {2, 12}}) {
    const GF f = gf(p, n);
    const auto elems = f.elements();
    std::vector<GFElem> image;
    for (const auto& x : elems) image.push_back(frobenius(x));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const GFElem s = elems[i] + elems[j];
        ASSERT_EQ(image[index_of(s, p)], image[i] + image[j]);
      }
    }
  }
}

TEST(Frobenius, MultiplicativeAndBijective) {
  const GF f = gf(3, 4);
  const auto elems = f.elements();
  std::vector<bool> hit(elems.size(), false);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    hit[index_of(frobenius(elems[i]), 3)] = true;
    for (std::size_t j = 0; j < elems.size(); j += 7) {
      ASSERT_EQ(frobenius(elems[i] * elems[j]), frobenius(elems[i]) * frobenius(elems[j]));
    }
  }
  EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(elems.size()));
}

TEST(Frobenius, PthRootsAreUnique) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 3}}) {
    const GF f = gf(p, n);
    for (const auto& x : f.elements()) {
      const GFElem y = unique_pth_root(x);
      ASSERT_EQ(pow(y, Integer(static_cast<unsigned long>(p))), x);
    }
  }
}

TEST(Frobenius, OrderEqualsDegree) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {2, 5}, {2, 16}, {3, 4}, {3, 10}, {5, 6}, {7, 5}, {251, 2}, {65521, 1}}) {
    EXPECT_EQ(frobenius_order(gf(p, n)), n) << p << "^" << n;
  }
}

TEST(Classification, DifferentModuliGiveIsomorphicFields) {
  for (const auto& [m1, m2] : std::vector<std::pair<FpPoly, FpPoly>>{
           {fppoly({1, 1, 0, 1}, 2), fppoly({1, 0, 1, 1}, 2)},
           {fppoly({1, 1, 0, 0, 1}, 2), fppoly({1, 0, 0, 1, 1}, 2)},
           {fppoly({1, 0, 1}, 3), fppoly({2, 1, 1}, 3)}}) {
    const GF a = gf_with_modulus(m1), b = gf_with_modulus(m2);
    const auto ea = a.elements(), eb = b.elements();
    // A root of the first modulus inside the second field.
    std::optional<GFElem> beta;
    for (const auto& y : eb) {
      GFElem acc = b.tower->zero_element();
      for (std::size_t k = m1.size(); k-- > 0;) acc = acc * y + b.tower->from_base(m1[k]);
      if (acc.is_zero()) {
        beta = y;
        break;
      }
    }
    ASSERT_TRUE(beta.has_value());
    auto phi = [&](const GFElem& x) {
      GFElem acc = b.tower->zero_element();
      for (std::size_t k = x.coords().size(); k-- > 0;) acc = acc * *beta + b.tower->from_base(x.coords()[k]);
      return acc;
    };
    std::vector<bool> hit(eb.size(), false);
    for (const auto& x : ea) {
      hit[index_of(phi(x), a.p)] = true;
      for (const auto& y : ea) {
        ASSERT_EQ(phi(x * y), phi(x) * phi(y));
        ASSERT_EQ(phi(x + y), phi(x) + phi(y));
      }
    }
    EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(eb.size()));
  }
}

TEST(Classification, FieldPolynomialFactorsIntoAllIrreduciblesOfDividingDegree) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 4}, {5, 2}, {2, 8}}) {
    const FpPoly f = FpPoly::monomial(FpScalar(1, p), ipow(p, n)) - FpPoly::identity(FpScalar(0, p));
    const auto fac = factor_fp(f);
    std::map<std::uint64_t, long> by_degree;
    for (const auto& [g, m] : fac.factors) {
      ASSERT_EQ(m, 1);
      by_degree[static_cast<std::uint64_t>(g.deg())] += 1;
    }
    for (auto d : divisors(n)) EXPECT_EQ(by_degree[d], count_irreducibles(p, d)) << p << "^" << n << " d=" << d;
    EXPECT_EQ(by_degree.size(), divisors(n).size());
  }
}

TEST(Subfields, OrdersAreThePowersForEveryDivisor) {
  for (std::uint64_t p : {2ULL, 3ULL}) {
    const auto subs = subfields(gf(p, 12));
    std::vector<unsigned> degrees;
    for (const auto& s : subs) {
      degrees.push_back(s.degree);
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), p, s.degree);
      EXPECT_EQ(s.order(), expected);
    }
    EXPECT_EQ(degrees, (std::vector<unsigned>{1, 2, 3, 4, 6, 12}));
  }
}

TEST(Subfields, NoFieldOfFourInsideFieldOfEight) {
  std::vector<Integer> orders;
  for (const auto& s : subfields(gf(2, 3))) orders.push_back(s.order());
  EXPECT_EQ(orders, (std::vector<Integer>{2, 8}));
}

TEST(Subfields, ElementsAreClosedAndFixedByFrobeniusPower) {
  const GF f = gf(2, 6);
  for (const auto& s : subfields(f)) {
    const auto elems = s.elements();
    ASSERT_EQ(Integer(static_cast<unsigned long>(elems.size())), s.order());
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), 2, s.degree);
    for (const auto& x : elems) {
      ASSERT_EQ(pow(x, q), x);
      for (const auto& y : elems) ASSERT_EQ(pow(x * y, q), x * y);
    }
  }
}

TEST(MultiplicativeGroup, IsCyclicWithEulerPhiGenerators) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {2, 6}, {7, 2}}) {
    const GF f = gf(p, n);
    const Integer q1 = f.size() - 1;
    const GFElem g = multiplicative_generator(f);
    EXPECT_EQ(multiplicative_order(g), q1);
    long generators = 0;
    for (const auto& x : f.elements()) {
      if (!x.is_zero() && multiplicative_order(x) == q1) ++generators;
    }
    // Euler phi of q - 1.
    const std::uint64_t m = to_u64(q1);
    std::uint64_t phi = m;
    for (auto r : prime_divisors(m)) phi = phi / r * (r - 1);
    EXPECT_EQ(generators, static_cast<long>(phi));
  }
}

TEST(MultiplicativeGroup, PrimitiveRoots) {
  EXPECT_TRUE(is_primitive_root(3, 7));
  EXPECT_FALSE(is_primitive_root(2, 7));
  for (std::uint64_t p : primes_up_to(100)) {
    for (long a = 1; a < static_cast<long>(p); ++a) {
      std::uint64_t order = 1, x = static_cast<std::uint64_t>(a);
      while (x != 1) {
        x = x * static_cast<std::uint64_t>(a) % p;
        ++order;
      }
      ASSERT_EQ(is_primitive_root(a, p), order == p - 1) << a << " mod " << p;
    }
  }
}

TEST(GaloisOfFiniteFields, CyclicGeneratedByFrobeniusPower) {
  const auto a = gal_ff(2, 12, 4);
  EXPECT_EQ(a.order, 3u);
  EXPECT_EQ(a.type, "C3");
  const auto b = gal_ff(2, 6, 1);
  EXPECT_EQ(b.type, "C6");
  EXPECT_TRUE(b.enumerated);
  EXPECT_TRUE(b.matches_enumeration);
  EXPECT_EQ(gal_ff(3, 4, 4).type, "C1");
  try {
    gal_ff(2, 6, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotADivisor);
  }
}
