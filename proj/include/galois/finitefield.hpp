#pragma once

// GF(p^n) as a one-level tower over F_p: Frobenius, subfields, multiplicative
// generators and the cyclic Galois groups between them.

#include <cstdint>
#include <string>
#include <vector>

#include "galois/group.hpp"
#include "galois/tower.hpp"

namespace galois {

using GFElem = TowerElem<FpScalar>;

inline constexpr std::uint64_t kDefaultFieldBudget = 1ULL << 20;

/// Least monic irreducible of degree n in canonical order. Budget when p^n
/// candidates would exceed the budget.
FpPoly find_irreducible(std::uint64_t p, unsigned n, std::uint64_t budget = kDefaultFieldBudget);

struct GF {
  std::uint64_t p;
  unsigned n;
  FpPoly modulus;
  TowerPtr<FpScalar> tower;

  Integer size() const;
  /// A root of the modulus; for n = 1 the residue it vanishes at.
  GFElem generator() const;
  /// Every element in counting order: coordinate 0 is the least significant
  /// base-p digit. Budget past `budget`.
  std::vector<GFElem> elements(std::uint64_t budget = kDefaultFieldBudget) const;
};

GF gf(std::uint64_t p, unsigned n, std::uint64_t budget = kDefaultFieldBudget);
/// GF(p^n) from a caller-chosen irreducible; NotIrreducible otherwise.
GF gf_with_modulus(const FpPoly& modulus);

GFElem frobenius(const GFElem& x);
/// Least m >= 1 with Frobenius^m the identity, tested on the generator.
unsigned frobenius_order(const GF& field);
/// The y with y^p = x, as x^(p^(n-1)).
GFElem unique_pth_root(const GFElem& x);

struct GFSubfield {
  unsigned degree;             // the subfield has p^degree elements
  std::vector<GFElem> basis;   // over F_p
  Integer order() const;
  /// Every element, in counting order over the basis; Budget past `budget`.
  std::vector<GFElem> elements(std::uint64_t budget = kDefaultFieldBudget) const;
};

/// {x : x^(p^m) = x} for each divisor m of n, ascending, as the kernel of
/// Frobenius^m - 1. Budget when p^n exceeds the budget.
std::vector<GFSubfield> subfields(const GF& field, std::uint64_t budget = kDefaultFieldBudget);

/// Multiplicative order of a nonzero element.
Integer multiplicative_order(const GFElem& x);
/// First element in counting order of order p^n - 1, certified by
/// x^((q-1)/r) != 1 for every prime r dividing q - 1.
GFElem multiplicative_generator(const GF& field, std::uint64_t budget = kDefaultFieldBudget);
bool is_primitive_root(long a, std::uint64_t p);

struct FiniteFieldGalois {
  unsigned order;            // n/m
  unsigned frobenius_power;  // generated by Frobenius^m
  std::vector<Permutation> action;  // on the conjugates a^(p^i) of the generator
  FiniteGroup group;
  std::string type;
  bool enumerated;          // automorphisms() of the splitting field was run
  bool matches_enumeration; // it found n automorphisms forming a cyclic group
};

/// Gal(GF(p^n) : GF(p^m)). NotADivisor unless m divides n.
FiniteFieldGalois gal_ff(std::uint64_t p, unsigned n, unsigned m);

}  // namespace galois
