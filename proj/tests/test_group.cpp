#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "galois/errors.hpp"
#include "galois/group.hpp"

using namespace galois;

namespace {

// Closure of a generating set by breadth-first multiplication.
std::vector<Permutation> closure(const std::vector<Permutation>& gens) {
  Permutation id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<Permutation> out{id};
  std::set<Permutation> seen{id};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Permutation h = compose(g, out[i]);
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin() + 1, out.end());
  return out;
}

FiniteGroup symmetric(int n) {
  Permutation cycle(static_cast<std::size_t>(n)), swap(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    swap[static_cast<std::size_t>(i)] = i;
  }
  std::swap(swap[0], swap[1]);
  return FiniteGroup::from_permutations(closure({cycle, swap}));
}

// The 3-cycles (i i+1 i+2) generate A_n.
FiniteGroup alternating(int n) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < n; ++i) {
    Permutation c(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = k;
    c[static_cast<std::size_t>(i)] = i + 1;
    c[static_cast<std::size_t>(i + 1)] = i + 2;
    c[static_cast<std::size_t>(i + 2)] = i;
    gens.push_back(c);
  }
  return FiniteGroup::from_permutations(closure(gens));
}

FiniteGroup dihedral4() { return FiniteGroup::from_permutations(closure({{1, 2, 3, 0}, {0, 3, 2, 1}})); }

FiniteGroup klein() { return FiniteGroup::from_permutations(closure({{1, 0, 2, 3}, {0, 1, 3, 2}})); }

// Left-regular action of the quaternions on {1,i,j,k,-1,-i,-j,-k}.
FiniteGroup quaternion() {
  const Permutation i = {1, 4, 3, 6, 5, 0, 7, 2};
  const Permutation j = {2, 7, 4, 1, 6, 3, 0, 5};
  return FiniteGroup::from_permutations(closure({i, j}));
}

std::vector<std::size_t> orders(const std::vector<Subgroup>& hs) {
  std::vector<std::size_t> out;
  for (const auto& h : hs) out.push_back(h.order());
  return out;
}

}  // namespace

TEST(Permutations, CompositionAndInverse) {
  const Permutation a = {1, 2, 0}, b = {1, 0, 2};
  EXPECT_EQ(compose(a, b), (Permutation{2, 1, 0}));
  EXPECT_EQ(compose(a, invert(a)), (Permutation{0, 1, 2}));
  EXPECT_EQ(cycle_notation(a), "(1 2 3)");
  EXPECT_EQ(cycle_notation({0, 1, 2}), "()");
  EXPECT_TRUE(is_even(a));
  EXPECT_FALSE(is_even(b));
}

TEST(Axioms, TablesAreGroups) {
  for (const auto& g : {symmetric(3), symmetric(4), dihedral4(), quaternion(), alternating(4)}) {
    EXPECT_TRUE(g.is_associative());
    for (int a = 0; a < static_cast<int>(g.order()); ++a) {
      ASSERT_EQ(g.multiply(a, 0), a);
      ASSERT_EQ(g.multiply(0, a), a);
      ASSERT_EQ(g.multiply(a, g.inverse(a)), 0);
    }
  }
}

TEST(Axioms, BrokenTableIsRejected) {
  EXPECT_THROW(FiniteGroup(std::vector<std::vector<int>>{{0, 1}, {1, 1}}), Error);
}

TEST(Naming, SmallGroups) {
  EXPECT_EQ(abstract_type(symmetric(3)), "S3");
  EXPECT_EQ(abstract_type(symmetric(4)), "S4");
  EXPECT_EQ(abstract_type(dihedral4()), "D4");
  EXPECT_EQ(abstract_type(quaternion()), "Q8");
  EXPECT_EQ(abstract_type(klein()), "C2 x C2");
  EXPECT_EQ(abstract_type(alternating(4)), "A4");
  EXPECT_EQ(abstract_type(alternating(5)), "A5");
  EXPECT_EQ(abstract_type(symmetric(5)), "S5");
  EXPECT_EQ(abstract_type(FiniteGroup::from_permutations(closure({{1, 2, 3, 0}}))), "C4");
}

TEST(Naming, TransitiveActionsAreNamedBySymmetricGroup) {
  const auto elems = closure({{1, 2, 0}, {1, 0, 2}});
  EXPECT_EQ(isomorphism_type(FiniteGroup::from_permutations(elems), elems), "S3");
}

TEST(Subgroups, KnownLatticeSizes) {
  EXPECT_EQ(symmetric(3).subgroups().size(), 6u);
  EXPECT_EQ(dihedral4().subgroups().size(), 10u);
  EXPECT_EQ(quaternion().subgroups().size(), 6u);
  EXPECT_EQ(alternating(4).subgroups().size(), 10u);
  EXPECT_EQ(symmetric(4).subgroups().size(), 30u);
  EXPECT_EQ(orders(dihedral4().subgroups()), (std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 4, 4, 4, 8}));
}

TEST(Subgroups, LagrangeAndClosure) {
  const FiniteGroup g = symmetric(4);
  for (const auto& h : g.subgroups()) {
    ASSERT_EQ(g.order() % h.order(), 0u);
    ASSERT_TRUE(g.is_subgroup(h.members));
    ASSERT_TRUE(h.contains(0));
  }
}

TEST(Subgroups, OrderCap) {
  try {
    symmetric(5).subgroups();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCap);
  }
}

TEST(Subgroups, NotASubgroup) {
  try {
    symmetric(3).subgroup({0, 1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASubgroup);
  }
}

TEST(Normality, NormalSubgroupsOfS4) {
  const FiniteGroup g = symmetric(4);
  std::vector<std::size_t> normal;
  for (const auto& h : g.subgroups()) {
    if (g.is_normal(h)) normal.push_back(h.order());
  }
  EXPECT_EQ(normal, (std::vector<std::size_t>{1, 4, 12, 24}));
}

TEST(Normality, QuotientOfS4ByKleinIsS3) {
  const FiniteGroup g = symmetric(4);
  for (const auto& h : g.subgroups()) {
    if (h.order() == 4 && g.is_normal(h)) EXPECT_EQ(abstract_type(g.quotient(h)), "S3");
  }
  const Subgroup not_normal = g.generated({1});
  if (!g.is_normal(not_normal)) EXPECT_THROW(g.quotient(not_normal), Error);
}

TEST(Solvability, DerivedSeries) {
  EXPECT_EQ(orders(symmetric(4).derived_series()), (std::vector<std::size_t>{24, 12, 4, 1}));
  EXPECT_TRUE(symmetric(4).is_solvable());
  EXPECT_EQ(orders(alternating(5).derived_series()), (std::vector<std::size_t>{60}));
  EXPECT_FALSE(alternating(5).is_solvable());
  EXPECT_FALSE(symmetric(5).is_solvable());
  EXPECT_TRUE(quaternion().is_solvable());
}

TEST(Solvability, FiveCycleAndTranspositionGenerateS5) {
  const auto elems = closure({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}});
  EXPECT_EQ(elems.size(), 120u);
  const FiniteGroup g = FiniteGroup::from_permutations(elems);
  EXPECT_EQ(orders(g.derived_series()), (std::vector<std::size_t>{120, 60}));
}

TEST(Generators, SpanTheGroup) {
  for (const auto& g : {symmetric(4), quaternion(), dihedral4(), alternating(5)}) {
    EXPECT_EQ(g.generated(g.generators()).order(), g.order());
  }
}

TEST(Restriction, SubgroupAsAGroup) {
  const FiniteGroup g = symmetric(4);
  for (const auto& h : g.subgroups()) {
    const FiniteGroup r = g.restrict_to(h);
    ASSERT_EQ(r.order(), h.order());
    if (h.order() == 8) ASSERT_EQ(abstract_type(r), "D4");
    if (h.order() == 12) ASSERT_EQ(abstract_type(r), "A4");
  }
}

TEST(Naming, CyclicAlternatingGroupOnThreePointsIsC3) {
  const auto elems = closure({{1, 2, 0}});
  EXPECT_EQ(isomorphism_type(FiniteGroup::from_permutations(elems), elems), "C3");
}
