#pragma once

// Intermediate fields of a splitting field as subspaces of its flat
// coordinate space, and the maps between them and subgroups of the Galois
// group.

#include <memory>
#include <string>
#include <vector>

#include "galois/galois.hpp"

namespace galois {

template <class K>
struct Subfield {
  TowerPtr<K> ambient;
  Subspace<K> space;  // echelon basis; equality of subfields is equality here
  TowerElem<K> primitive;
  Poly<K> primitive_min_poly;

  std::size_t dim() const { return space.dim(); }
  bool contains(const TowerElem<K>& x) const;
  friend bool operator==(const Subfield& a, const Subfield& b) { return a.space == b.space; }
};

/// Smallest subfield of the ambient tower containing the given elements.
template <class K>
Subfield<K> subfield_generated(const TowerPtr<K>& ambient, const std::vector<TowerElem<K>>& generators);

/// Subfield on a subspace already known to be a field; finds a primitive
/// element by trying basis vectors, then sums of two, then small integer
/// combinations.
template <class K>
Subfield<K> subfield_from_space(const TowerPtr<K>& ambient, Subspace<K> space);

/// Common kernel of (A_g - I) over generators g of H. InternalInvariant unless
/// the dimension is [M:base]/|H|.
template <class K>
Subfield<K> fixed_field(const Subgroup& h, const GaloisGroup<K>& g);

/// Elements of G fixing L pointwise.
template <class K>
Subgroup gal_over(const Subfield<K>& l, const GaloisGroup<K>& g);

/// Every element of G maps L into itself.
template <class K>
bool is_normal_intermediate(const Subfield<K>& l, const GaloisGroup<K>& g);

template <class K>
struct LatticeEntry {
  Subgroup subgroup;
  bool normal;
  Subfield<K> fixed;
  bool gal_over_matches;     // gal_over(fixed_field(H)) = H
  bool fixed_field_matches;  // fixed_field(gal_over(L)) = L for L = fixed_field(H)
  bool degree_matches;       // |H| * dim = [M:base]
};

template <class K>
struct CorrespondenceReport {
  std::vector<LatticeEntry<K>> entries;
  bool order_reversing;  // H1 <= H2 exactly when Fix(H2) <= Fix(H1)
  bool ok() const;
};

/// Runs the correspondence over the whole subgroup lattice (OrderCap past 60).
template <class K>
CorrespondenceReport<K> verify_correspondence(const GaloisGroup<K>& g);

struct QuotientReport {
  Subgroup normal_subgroup;
  std::size_t quotient_order;
  std::string quotient_type;
  std::size_t restriction_order;  // distinct restrictions of G to L
  std::string restriction_type;
  bool consistent() const { return quotient_order == restriction_order && quotient_type == restriction_type; }
};

/// G/Gal(M:L) against the group of restrictions to L. NotNormal unless L is
/// normal over the base.
template <class K>
QuotientReport quotient_check(const Subfield<K>& l, const GaloisGroup<K>& g);

}  // namespace galois
