#include <gtest/gtest.h>

#include "galois/extension.hpp"
#include "galois/splitting.hpp"
#include "support.hpp"

using namespace galois;
using galois::support::random_rational;
using galois::support::uniform;
using QElem = TowerElem<Rational>;

namespace {

TowerPtr<Rational> rationals() { return Tower<Rational>::base(Rational(0)); }

QElem random_element(const TowerPtr<Rational>& tower) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < tower->degree(); ++i) c.push_back(random_rational(5));
  return tower->element(std::move(c));
}

}  // namespace

TEST(SimpleExtension, SquareRootOfTwo) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 1}), "r");
  EXPECT_EQ(a.tower->degree(), 2u);
  EXPECT_EQ(a.root * a.root, QElem(a.tower, 2));
  EXPECT_EQ(min_poly(a.root), qpoly({-2, 0, 1}));
}

TEST(SimpleExtension, InverseFormulaInQuadraticField) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 1}), "r");
  for (int trial = 0; trial < 100; ++trial) {
    const Rational x = random_rational(), y = random_rational();
    if (x == 0 && y == 0) continue;
    const QElem z = a.tower->from_base(x) + a.tower->from_base(y) * a.root;
    const QElem expected = (a.tower->from_base(x) - a.tower->from_base(y) * a.root) *
                           a.tower->from_base(inverse(x * x - 2 * y * y));
    ASSERT_EQ(inverse(z), expected);
  }
}

TEST(SimpleExtension, FourElementField) {
  const auto a = adjoin_root(Tower<FpScalar>::base(FpScalar(0, 2)), fppoly({1, 1, 1}, 2), "a");
  EXPECT_EQ(a.tower->degree(), 2u);
  EXPECT_EQ(a.root * a.root, a.root + TowerElem<FpScalar>(a.tower, 1));
  EXPECT_EQ(all_elements(a.tower, 1000).size(), 4u);
}

TEST(SimpleExtension, NineElementField) {
  const auto a = adjoin_root(Tower<FpScalar>::base(FpScalar(0, 3)), fppoly({-2, 0, 1}, 3), "r");
  EXPECT_EQ(all_elements(a.tower, 1000).size(), 9u);
}

TEST(SimpleExtension, ReducibleModulusIsRejected) {
  try {
    adjoin_root(rationals(), qpoly({-4, 0, 1}), "r");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
  }
}

TEST(TowerLaw, SquareRootsOfTwoAndThree) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 1}), "r2");
  const auto b = adjoin_root(a.tower, qpoly({-3, 0, 1}), "r3");
  EXPECT_EQ(b.tower->degree(), 4u);
  EXPECT_EQ(b.tower->degree_over(*a.tower), 2u);
  const QElem sum = b.tower->embed(a.root) + b.root;
  EXPECT_EQ(min_poly(sum), qpoly({1, 0, -10, 0, 1}));
  EXPECT_FALSE(lies_in(b.root, *a.tower));
  EXPECT_TRUE(lies_in(b.tower->embed(a.root), *a.tower));
  EXPECT_EQ(relative_degree(b.root, *a.tower), 2u);
}

TEST(TowerLaw, CubeRootOfTwoAndCubeRootOfUnity) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 0, 1}), "x");
  const auto b = adjoin_root(a.tower, qpoly({1, 1, 1}), "w");
  EXPECT_EQ(b.tower->degree(), 6u);
  EXPECT_EQ(min_poly(a.root), qpoly({-2, 0, 0, 1}));
  EXPECT_EQ(rationals()->degree(), 1u);
}

TEST(TowerLaw, DegreeSixty) {
  const auto a = adjoin_root(rationals(), qpoly({-12, 0, 0, 0, 1}), "a");
  QPoly m = QPoly::monomial(Rational(1), 15) - QPoly::constant(Rational(6));
  const auto b = adjoin_root(a.tower, m, "b");
  EXPECT_EQ(b.tower->degree(), 60u);
  EXPECT_EQ(b.tower->degree_over(*a.tower), 15u);
}

TEST(PrimitiveElement, SquareRootOfTwoAndI) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 1}), "r");
  const auto b = adjoin_root(a.tower, qpoly({1, 0, 1}), "i");
  const auto& prim = b.tower->primitive();
  EXPECT_EQ(prim.min_poly.deg(), 4);
  EXPECT_EQ(min_poly(prim.element), prim.min_poly);
}

TEST(FieldAxioms, RandomElementsOfADegreeSixTower) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 0, 1}), "x");
  const auto b = adjoin_root(a.tower, qpoly({1, 1, 1}), "w");
  for (int trial = 0; trial < 40; ++trial) {
    const QElem x = random_element(b.tower), y = random_element(b.tower), z = random_element(b.tower);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * y, y * x);
    if (!x.is_zero()) ASSERT_TRUE((x * inverse(x)).is_one());
  }
}

TEST(MinimalPolynomial, AnnihilatesAndDividesTowerDegree) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 1}), "r2");
  const auto b = adjoin_root(a.tower, qpoly({-5, 0, 1}), "r5");
  for (int trial = 0; trial < 30; ++trial) {
    const QElem x = random_element(b.tower);
    const QPoly m = min_poly(x);
    ASSERT_TRUE(m.is_monic());
    ASSERT_EQ(b.tower->degree() % static_cast<std::size_t>(m.deg()), 0u);
    QElem acc = b.tower->zero_element();
    for (std::size_t k = m.size(); k-- > 0;) acc = acc * x + b.tower->from_base(m[k]);
    ASSERT_TRUE(acc.is_zero());
  }
}

TEST(TowerMismatch, UnrelatedTowersDoNotMix) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 1}), "r");
  const auto b = adjoin_root(rationals(), qpoly({-3, 0, 1}), "s");
  try {
    (void)(a.root + b.root);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TowerMismatch);
  }
}

TEST(Describe, LabelsAndMinimalPolynomials) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 1}), "r2");
  const auto b = adjoin_root(a.tower, qpoly({-3, 0, 1}), "r3");
  EXPECT_EQ(b.tower->labels(), (std::vector<std::string>{"r2", "r3"}));
  const auto d = b.tower->describe();
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].second, "t^2 - 2");
}

TEST(ExtensionFactoring, SplitsOverItsOwnRoot) {
  const auto a = adjoin_root(rationals(), qpoly({-2, 0, 1}), "r");
  const auto fac = factor_over_extension(a.tower->embed_base(qpoly({-2, 0, 1})), a.tower);
  EXPECT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.expand(), a.tower->embed_base(qpoly({-2, 0, 1})));
  const auto cube = factor_over_extension(a.tower->embed_base(qpoly({-2, 0, 0, 1})), a.tower);
  EXPECT_TRUE(cube.is_irreducible());
}
