#include <gtest/gtest.h>

#include "galois/scalar.hpp"
#include "support.hpp"

using namespace galois;
using galois::support::uniform;

TEST(FpInverse, Examples) {
  EXPECT_EQ(fp_inv(FpScalar(3, 7)).residue(), 5u);
  EXPECT_EQ(fp_inv(FpScalar(1, 13)).residue(), 1u);
  EXPECT_EQ(fp_inv(FpScalar(2, 3)).residue(), 2u);
}

TEST(FpInverse, ZeroHasNoInverse) {
  try {
    fp_inv(FpScalar(0, 7));
    FAIL() << "expected ZeroInverse";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInverse);
  }
}

TEST(FpInverse, MatchesExhaustiveSearchForSmallPrimes) {
  for (std::uint64_t p : primes_up_to(97)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      std::uint64_t found = 0;
      for (std::uint64_t b = 1; b < p; ++b) {
        if ((a * b) % p == 1) found = b;
      }
      ASSERT_EQ(fp_inv(FpScalar(static_cast<std::int64_t>(a), p)).residue(), found) << a << " mod " << p;
    }
  }
}

TEST(Primes, Examples) {
  EXPECT_TRUE(is_prime(65537));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
  EXPECT_EQ(factor_integer(60), (std::vector<std::uint64_t>{2, 2, 3, 5}));
}

TEST(Primes, AgreesWithSieve) {
  const std::uint64_t n = 5000;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i * i <= n; ++i) {
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  for (std::uint64_t k = 0; k <= n; ++k) ASSERT_EQ(is_prime(k), k >= 2 && !composite[k]) << k;
}

TEST(Primes, FactorizationMultipliesBack) {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    std::uint64_t prod = 1;
    for (auto q : factor_integer(n)) {
      ASSERT_TRUE(is_prime(q));
      prod *= q;
    }
    ASSERT_EQ(prod, n);
  }
}

TEST(FermatPrimes, Examples) {
  EXPECT_TRUE(is_fermat_prime(17));
  EXPECT_FALSE(is_fermat_prime(7));
  EXPECT_TRUE(is_fermat_prime(257));
  EXPECT_TRUE(is_fermat_prime(65537));
  EXPECT_TRUE(is_fermat_prime(3));
}

TEST(FermatPrimes, BelowOneHundredThousandAreTheKnownFive) {
  std::vector<std::uint64_t> found;
  for (std::uint64_t q = 2; q < 100000; ++q) {
    if (is_fermat_prime(q)) found.push_back(q);
  }
  EXPECT_EQ(found, (std::vector<std::uint64_t>{3, 5, 17, 257, 65537}));
}

TEST(Binomial, PrimeDividesMiddleCoefficients) {
  for (std::uint64_t p : primes_up_to(50)) {
    for (unsigned i = 1; i < p; ++i) {
      ASSERT_EQ(binomial(static_cast<unsigned>(p), i) % Integer(static_cast<unsigned long>(p)), 0) << p << " " << i;
    }
  }
}

TEST(FieldAxioms, RationalTriples) {
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = support::random_rational(), b = support::random_rational(), c = support::random_rational();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (a != 0) ASSERT_EQ(a * inverse(a), 1);
  }
}

TEST(FieldAxioms, FpTriples) {
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 101ULL, 65537ULL, 4294967291ULL}) {
    for (int trial = 0; trial < 300; ++trial) {
      const long hi = static_cast<long>(std::min<std::uint64_t>(p - 1, 1ULL << 40));
      const FpScalar a(uniform(0, hi), p), b(uniform(0, hi), p), c(uniform(0, hi), p);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a - a, FpScalar(0, p));
      if (a.residue() != 0) ASSERT_EQ((a * fp_inv(a)).residue(), 1u);
    }
  }
}

TEST(Rationals, CanonicalForm) {
  const Rational q = make_rational(Integer(6), Integer(-4));
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rational(Integer(0), Integer(5)).get_den(), 1);
}

TEST(FpScalar, MixedModuliAreRejected) {
  EXPECT_THROW(FpScalar(1, 5) + FpScalar(1, 7), Error);
}
