#pragma once

// Splitting fields as explicit towers. Starting from the base, a root of the
// lowest-degree nonlinear factor is adjoined until everything is linear, so
// every tower generator is a root of the input.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "galois/extension.hpp"

namespace galois {

enum class AdjoinOrder {
  LowestDegree,   // smallest nonlinear factor first, ties in canonical order
  HighestDegree,  // largest first, ties in reverse canonical order
};

struct SplittingLimits {
  std::size_t max_degree = 24;
  std::uint64_t enumeration_budget = 1ULL << 20;  // p^d bound over F_p
  std::uint64_t exhaustive_check_budget = 1ULL << 16;
  AdjoinOrder order = AdjoinOrder::LowestDegree;
  FactorLimits factor{};
};

template <class K>
struct SplittingField {
  TowerPtr<K> field;
  /// Distinct roots sorted by (degree over the base, coordinates).
  std::vector<TowerElem<K>> roots;
  std::vector<int> multiplicities;
  Poly<K> source;

  std::size_t degree() const { return field->degree(); }
};

/// Splitting field of f over the tower `over` (which may already be an
/// extension). DegreeCap, naming the partial tower, when [M:base] would pass
/// the cap.
template <class K>
SplittingField<K> splitting_field_over(const TowerPtr<K>& over, const Poly<K>& f, const SplittingLimits& limits = {});

SplittingField<Rational> splitting_field_q(const QPoly& f, const SplittingLimits& limits = {});

/// GF(p^d) with d the lcm of the irreducible factor degrees. DegreeCap when
/// p^d exceeds the enumeration budget. For small fields the roots found by
/// factoring are checked against exhaustive evaluation.
SplittingField<FpScalar> splitting_field_fp(const FpPoly& f, const SplittingLimits& limits = {});

/// The roots multiply back to the source and every generator is a root.
template <class K>
bool verify_splits(const SplittingField<K>& sf);

/// Every element of a finite tower, in coordinate order.
template <class K>
std::vector<TowerElem<K>> all_elements(const TowerPtr<K>& tower, std::uint64_t budget);

}  // namespace galois
