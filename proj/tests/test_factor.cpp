#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "galois/factor.hpp"
#include "support.hpp"

using namespace galois;
using galois::support::random_fppoly;
using galois::support::uniform;

namespace {

std::vector<long> signed_divisors(long n) {
  std::vector<long> out;
  n = std::labs(n);
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(-d);
    }
  }
  return out;
}

long value_at(const ZPoly& f, long x) {
  long acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * x + f[k].get_si();
  return acc;
}

bool has_rational_root(const ZPoly& f) {
  if (f[0] == 0) return true;
  for (long p : signed_divisors(f[0].get_si())) {
    for (long q : signed_divisors(f.leading().get_si())) {
      if (q < 0) continue;
      if (eval(to_rational(f), make_rational(p, q)) == 0) return true;
    }
  }
  return false;
}

// Kronecker: a quadratic factor g is pinned down by g(-1), g(0), g(1), each a
// divisor of the corresponding value of f.
bool has_quadratic_factor(const ZPoly& f) {
  const long fm = value_at(f, -1), f0 = value_at(f, 0), f1 = value_at(f, 1);
  if (fm == 0 || f0 == 0 || f1 == 0) return true;
  for (long a : signed_divisors(fm)) {
    for (long b : signed_divisors(f0)) {
      for (long c : signed_divisors(f1)) {
        // g = b + u t + w t^2 with g(-1) = a, g(1) = c.
        if ((a + c - 2 * b) % 2 != 0 || (c - a) % 2 != 0) continue;
        const long w = (a + c - 2 * b) / 2, u = (c - a) / 2;
        if (w == 0) continue;
        const QPoly g = to_rational(zpoly({b, u, w}));
        if (rem(to_rational(f), g).is_zero()) return true;
      }
    }
  }
  return false;
}

bool irreducible_oracle(const ZPoly& f) {
  const int n = f.deg();
  if (n == 1) return true;
  if (has_rational_root(f)) return false;
  return n < 4 || !has_quadratic_factor(f);
}

ZPoly random_small_zpoly(int degree) {
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(-3, 3));
  while (c.back() == 0) c.back() = uniform(-3, 3);
  return ZPoly(std::move(c));
}

}  // namespace

TEST(Eisenstein, PaperExamples) {
  const long zero[] = {0};
  const auto w = eisenstein(zpoly({3, 0, 0, 9, -15, 2}), zero);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->prime, 3u);
  EXPECT_EQ(w->shift, 0);
  const long shifts[] = {0, 1};
  EXPECT_EQ(eisenstein(cyclotomic_p(5), shifts), (EisensteinWitness{5, 1}));
}

TEST(Eisenstein, CyclotomicShiftByOne) {
  const long one[] = {1};
  for (std::uint64_t p : primes_up_to(40)) {
    const auto w = eisenstein(cyclotomic_p(p), one);
    ASSERT_TRUE(w.has_value()) << p;
    EXPECT_EQ(w->prime, p);
    EXPECT_TRUE(eisenstein_conditions(shift(cyclotomic_p(p), Integer(1)), p));
  }
}

TEST(ModP, PaperExamples) {
  EXPECT_EQ(mod_p_certificate(zpoly({9, 14, 0, -8}), 31), std::optional<std::uint64_t>(7));
  EXPECT_TRUE(mod_p_witness_holds(zpoly({9, 14, 0, -8}), 7));
  EXPECT_FALSE(mod_p_witness_holds(zpoly({0, 1, 6}), 2));
}

TEST(ModP, WitnessesAreValidWhenever) {
  for (int trial = 0; trial < 200; ++trial) {
    const ZPoly f = random_small_zpoly(static_cast<int>(uniform(2, 5)));
    const auto p = mod_p_certificate(f, 31);
    if (!p) continue;
    ASSERT_TRUE(mod_p_witness_holds(f, *p));
    ASSERT_TRUE(irreducible_oracle(primitive_part(f))) << to_string(f) << " mod " << *p;
  }
}

TEST(IrreducibleQ, LowDegreeExamples) {
  const auto cert = is_irreducible_q(qpoly({-10, 0, 0, 1}));
  EXPECT_EQ(cert.verdict, Verdict::Irreducible);
  EXPECT_TRUE(verify_certificate(qpoly({-10, 0, 0, 1}), cert));
  const auto red = is_irreducible_q(qpoly({-8, 0, 0, 1}));
  EXPECT_EQ(red.verdict, Verdict::Reducible);
  ASSERT_TRUE(std::holds_alternative<RationalRootWitness>(red.witness));
  EXPECT_EQ(std::get<RationalRootWitness>(red.witness).root, 2);
}

TEST(IrreducibleQ, ConstantsAreRejected) {
  try {
    is_irreducible_q(qpoly({5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstantPolynomial);
  }
}

TEST(IrreducibleQ, AgreesWithKroneckerOracle) {
  int irreducible = 0, reducible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const ZPoly f = random_small_zpoly(static_cast<int>(uniform(1, 4)));
    const QPoly q = to_rational(f);
    const auto cert = is_irreducible_q(q);
    const bool expected = irreducible_oracle(primitive_part(f));
    ASSERT_EQ(cert.verdict == Verdict::Irreducible, expected) << to_string(f);
    ASSERT_TRUE(verify_certificate(q, cert)) << to_string(f) << " " << witness_kind(cert.witness);
    (expected ? irreducible : reducible) += 1;
  }
  EXPECT_GT(irreducible, 50);
  EXPECT_GT(reducible, 50);
}

TEST(IrreducibleQ, TamperedCertificatesAreRejected) {
  const QPoly f = qpoly({9, 14, 0, -8});
  EXPECT_FALSE(verify_certificate(f, {Verdict::Irreducible, ModPWitness{2}}));
  EXPECT_FALSE(verify_certificate(f, {Verdict::Irreducible, EisensteinWitness{3, 0}}));
  EXPECT_FALSE(verify_certificate(f, {Verdict::Reducible, RationalRootWitness{Rational(1)}}));
  EXPECT_TRUE(verify_certificate(f, {Verdict::Irreducible, ModPWitness{7}}));
}

TEST(FactorQ, PaperExamples) {
  const auto a = factor_q(qpoly({-5, 0, -4, 0, 1}));
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].first, qpoly({-5, 0, 1}));
  EXPECT_EQ(a.factors[1].first, qpoly({1, 0, 1}));
  const auto b = factor_q(qpoly({-1, 0, 0, 0, 0, 1}));
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_EQ(b.factors[0].first, qpoly({-1, 1}));
  EXPECT_EQ(b.factors[1].first, qpoly({1, 1, 1, 1, 1}));
}

TEST(FactorQ, RoundTripAndIrreducibleFactors) {
  for (int trial = 0; trial < 300; ++trial) {
    const ZPoly a = random_small_zpoly(static_cast<int>(uniform(1, 2)));
    const ZPoly b = random_small_zpoly(static_cast<int>(uniform(1, 2)));
    const QPoly f = to_rational(a * b * (uniform(0, 3) == 0 ? a : zpoly({1})));
    const auto fac = factor_q(f);
    ASSERT_EQ(fac.expand(), f) << to_string(f);
    for (const auto& [g, m] : fac.factors) {
      ASSERT_TRUE(g.is_monic());
      ASSERT_TRUE(irreducible_oracle(content_primitive(g).primitive)) << to_string(g);
    }
    // Uniqueness: factoring the expansion reproduces the same multiset.
    const auto again = factor_q(fac.expand());
    ASSERT_EQ(again.factors, fac.factors);
    ASSERT_EQ(again.unit, fac.unit);
  }
}

TEST(FactorQ, SwinnertonDyerStyleProductStaysIrreducible) {
  // t^4 - 10t^2 + 1 is reducible mod every prime but irreducible over Q.
  const auto fac = factor_q(qpoly({1, 0, -10, 0, 1}));
  EXPECT_TRUE(fac.is_irreducible());
  const auto cert = is_irreducible_q(qpoly({1, 0, -10, 0, 1}));
  EXPECT_EQ(cert.verdict, Verdict::Irreducible);
  EXPECT_TRUE(verify_certificate(qpoly({1, 0, -10, 0, 1}), cert));
}

TEST(FactorQ, RepeatedFactorsAndSquarefreeDecomposition) {
  const QPoly f = qpoly({-2, 1}) * qpoly({-2, 1}) * qpoly({-2, 1}) * qpoly({1, 0, 1});
  const auto fac = factor_q(f);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0], std::make_pair(qpoly({-2, 1}), 3));
  EXPECT_FALSE(is_squarefree_q(f));
  const auto parts = squarefree_decomposition(f);
  QPoly prod = qpoly({1});
  for (const auto& [g, m] : parts) {
    for (int i = 0; i < m; ++i) prod = prod * g;
  }
  EXPECT_EQ(prod, monic(f));
}

TEST(FactorQ, DegreeCap) {
  FactorLimits limits;
  limits.max_degree = 4;
  try {
    factor_q(qpoly({1, 0, 0, 0, 0, 1}), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeCap);
  }
}

TEST(RationalRoots, Examples) {
  EXPECT_EQ(rational_roots(qpoly({-6, 11, -6, 1})), (std::vector<Rational>{1, 2, 3}));
  EXPECT_EQ(rational_roots(qpoly({-1, 0, 4})), (std::vector<Rational>{make_rational(-1, 2), make_rational(1, 2)}));
  EXPECT_TRUE(rational_roots(qpoly({-2, 0, 1})).empty());
}

TEST(FactorFp, PaperExamples) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL}) {
    FpPoly f = FpPoly::constant(FpScalar(0, p));
    for (std::uint64_t k = 0; k < p; ++k) f = f + FpPoly::monomial(FpScalar(1, p), k);
    const auto fac = factor_fp(f);
    bool has_t_minus_1 = false;
    for (const auto& [g, m] : fac.factors) has_t_minus_1 |= g == fppoly({-1, 1}, p);
    EXPECT_TRUE(has_t_minus_1) << p;
  }
  EXPECT_TRUE(is_irreducible_fp(fppoly({1, 1, 1}, 2)));
}

TEST(FactorFp, MatchesTrialDivision) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    for (int trial = 0; trial < 60; ++trial) {
      const FpPoly f = random_fppoly(static_cast<int>(uniform(1, 7)), p);
      const auto fast = factor_fp(f);
      const auto slow = factor_fp_trial_division(f);
      ASSERT_EQ(fast.factors, slow.factors) << to_string(f) << " mod " << p;
      ASSERT_EQ(fast.expand(), f);
    }
  }
}

TEST(FactorFp, LargePrimeRoundTrip) {
  for (int trial = 0; trial < 30; ++trial) {
    const FpPoly f = random_fppoly(static_cast<int>(uniform(1, 12)), 4294967291ULL);
    const auto fac = factor_fp(f);
    ASSERT_EQ(fac.expand(), f);
    for (const auto& [g, m] : fac.factors) ASSERT_TRUE(is_irreducible_fp(g));
  }
}

TEST(RootsFp, Examples) {
  EXPECT_TRUE(roots_fp(fppoly({-2, 0, 0, 1}, 7)).empty());
  EXPECT_TRUE(roots_fp(fppoly({-2, 0, 1}, 3)).empty());
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL}) {
    const FpPoly f = FpPoly::monomial(FpScalar(1, p), p) - FpPoly::identity(FpScalar(0, p));
    EXPECT_EQ(roots_fp(f).size(), p);
  }
}

TEST(RootsFp, CountMatchesLinearFactors) {
  for (std::uint64_t p : {3ULL, 5ULL, 11ULL}) {
    for (int trial = 0; trial < 60; ++trial) {
      const FpPoly f = random_fppoly(static_cast<int>(uniform(1, 6)), p);
      std::size_t linear = 0;
      for (const auto& [g, m] : factor_fp(f).factors) linear += g.deg() == 1 ? 1 : 0;
      ASSERT_EQ(roots_fp(f).size(), linear);
    }
  }
}
