#pragma once

// Galois groups of splitting fields as explicit automorphisms. Each
// automorphism is fixed by the images of the tower generators; it also keeps
// its matrix on flat coordinates and its permutation of the roots.

#include <memory>
#include <string>
#include <vector>

#include "galois/group.hpp"
#include "galois/linalg.hpp"
#include "galois/splitting.hpp"

namespace galois {

template <class K>
struct Automorphism {
  std::vector<TowerElem<K>> generator_images;
  Permutation root_perm;
  Matrix<K> matrix;  // column j: image of the j-th flat basis monomial
};

template <class K>
class GaloisGroup {
 public:
  GaloisGroup(std::shared_ptr<const SplittingField<K>> field, std::vector<Automorphism<K>> elements);

  const SplittingField<K>& splitting_field() const { return *field_; }
  const std::shared_ptr<const SplittingField<K>>& shared_field() const { return field_; }
  const TowerPtr<K>& tower() const { return field_->field; }
  const std::vector<TowerElem<K>>& roots() const { return field_->roots; }

  std::size_t order() const { return elements_.size(); }
  const std::vector<Automorphism<K>>& elements() const { return elements_; }
  const Automorphism<K>& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  const FiniteGroup& group() const { return group_; }
  std::vector<Permutation> permutations() const;

 private:
  std::shared_ptr<const SplittingField<K>> field_;
  std::vector<Automorphism<K>> elements_;  // sorted by root permutation, identity first
  FiniteGroup group_;
};

/// Every automorphism of the splitting field over its base. Generator images
/// are chosen among the roots, level by level, subject to the mapped minimal
/// polynomial vanishing. InternalInvariant if the count differs from the degree.
template <class K>
GaloisGroup<K> automorphisms(const SplittingField<K>& sf);

/// phi(x) for x in the splitting field or one of its sub-towers.
template <class K>
TowerElem<K> apply(const Automorphism<K>& phi, const TowerElem<K>& x, const TowerPtr<K>& field);

template <class K>
bool is_transitive(const GaloisGroup<K>& g);

/// Root indices grouped by orbit, each orbit sorted, orbits by least member.
template <class K>
std::vector<std::vector<int>> orbits(const GaloisGroup<K>& g);

template <class K>
std::string isomorphism_type(const GaloisGroup<K>& g);

/// Isomorphism type of a subgroup, using its action on the roots.
template <class K>
std::string subgroup_type(const GaloisGroup<K>& g, const Subgroup& h);

}  // namespace galois
