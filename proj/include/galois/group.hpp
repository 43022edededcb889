#pragma once

// Finite groups given by a multiplication table over the indices 0..n-1,
// with 0 the identity. Subgroups are sorted index sets.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace galois {

/// p[i] is the image of point i.
using Permutation = std::vector<int>;

/// (a * b)[i] = a[b[i]], so b acts first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& p);
/// 1-based disjoint cycles, "()" for the identity.
std::string cycle_notation(const Permutation& p);
bool is_even(const Permutation& p);

struct Subgroup {
  std::vector<int> members;  // sorted, contains 0

  std::size_t order() const { return members.size(); }
  bool contains(int g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

class FiniteGroup {
 public:
  /// table[a][b] is the index of a*b. Checks identity, closure and inverses.
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  /// The group of a closed set of permutations, index 0 the identity.
  static FiniteGroup from_permutations(const std::vector<Permutation>& elements);

  std::size_t order() const { return table_.size(); }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_abelian() const;
  /// Brute-force associativity over every triple; order^3 work.
  bool is_associative() const;

  Subgroup whole() const;
  Subgroup trivial() const;
  Subgroup generated(const std::vector<int>& generators) const;
  /// NotASubgroup unless the set contains 0 and is closed.
  Subgroup subgroup(std::vector<int> members) const;
  bool is_subgroup(const std::vector<int>& members) const;

  /// Every subgroup, from cyclic seeds closed under pairwise joins, sorted by
  /// (order, members). OrderCap beyond `cap`.
  std::vector<Subgroup> subgroups(std::size_t cap = 60) const;

  /// NotASubgroup if h is not a subgroup.
  bool is_normal(const Subgroup& h) const;
  Subgroup commutator_subgroup(const Subgroup& h) const;
  /// G, G', G'', ... down to the first repeat.
  std::vector<Subgroup> derived_series() const;
  bool is_solvable() const;

  /// A small generating set: elements of highest order first, each kept only
  /// if it enlarges the span.
  std::vector<int> generators() const;

  /// h as a group in its own right, indices renumbered in member order.
  FiniteGroup restrict_to(const Subgroup& h) const;
  /// G/N for normal N; NotNormal otherwise. Cosets ordered by least member.
  FiniteGroup quotient(const Subgroup& n) const;
  std::vector<std::vector<int>> cosets(const Subgroup& n) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/// Name from a fingerprint: Cn and abelian products, S3, D_n, Q8, A4, S4, A5;
/// "unidentified group of order n" otherwise.
std::string abstract_type(const FiniteGroup& g);

/// As abstract_type, but a group acting transitively on k >= 3 points as the
/// full symmetric group is called Sk, and for k >= 4 the alternating group Ak.
std::string isomorphism_type(const FiniteGroup& g, const std::vector<Permutation>& action);

}  // namespace galois
