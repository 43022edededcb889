#pragma once

// Irreducibility certificates and complete factorization over F_p and Q.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "galois/factorization.hpp"
#include "galois/finite_factor.hpp"
#include "galois/poly.hpp"

namespace galois {

struct FactorLimits {
  int max_degree = 12;         // factor_q on user input
  int max_norm_degree = 256;   // norms built while factoring over extensions
  int eisenstein_shift_bound = 5;
  std::uint64_t mod_p_prime_bound = 31;
  std::uint64_t trial_division_cap = kDefaultTrialDivisionCap;
  std::uint64_t enumeration_budget = 1ULL << 20;
};

// --- F_p ------------------------------------------------------------------

/// Distinct-degree then equal-degree splitting.
Factorization<FpScalar> factor_fp(const FpPoly& f);

/// Trial division by every monic polynomial of degree <= deg/2, in
/// increasing degree. Budget if more than `budget` candidates are needed.
Factorization<FpScalar> factor_fp_trial_division(const FpPoly& f, std::uint64_t budget = 1ULL << 20);

/// Every root in F_p, by evaluation at all p residues.
std::vector<FpScalar> roots_fp(const FpPoly& f, std::uint64_t budget = 1ULL << 20);

bool is_irreducible_fp(const FpPoly& f);

// --- certificates over Q --------------------------------------------------

struct EisensteinWitness {
  std::uint64_t prime;
  long shift;  // criterion holds for f(t + shift)
  friend bool operator==(const EisensteinWitness&, const EisensteinWitness&) = default;
};

/// Tries every shift in order, each against every prime dividing the
/// non-leading coefficients. Absence of a witness proves nothing.
std::optional<EisensteinWitness> eisenstein(const ZPoly& f, std::span<const long> shifts,
                                            std::uint64_t trial_division_cap = kDefaultTrialDivisionCap);

/// p does not divide a_n, p divides the rest, p^2 does not divide a_0.
bool eisenstein_conditions(const ZPoly& f, std::uint64_t p);

/// Smallest prime p <= bound with p not dividing lc(f) and f mod p
/// irreducible. Never a reducibility claim.
std::optional<std::uint64_t> mod_p_certificate(const ZPoly& f, std::uint64_t prime_bound);

/// True when p is a valid mod-p witness for f.
bool mod_p_witness_holds(const ZPoly& f, std::uint64_t p);

enum class Verdict { Irreducible, Reducible };

struct LowDegreeRule {
  int degree;
};
struct RationalRootWitness {
  Rational root;
};
struct ModPWitness {
  std::uint64_t prime;
};
struct FullFactorizationWitness {
  Factorization<Rational> factorization;
};

using IrreducibilityWitness =
    std::variant<LowDegreeRule, RationalRootWitness, EisensteinWitness, ModPWitness, FullFactorizationWitness>;

struct IrreducibilityCertificate {
  Verdict verdict;
  IrreducibilityWitness witness;
};

std::string witness_kind(const IrreducibilityWitness& w);

/// Degree 1; rational roots for degree 2-3; Eisenstein with shifts in
/// [-B, B]; mod-p scan; full factorization as the fallback.
IrreducibilityCertificate is_irreducible_q(const QPoly& f, const FactorLimits& limits = {});

/// Re-validates a certificate without trusting the code that produced it.
bool verify_certificate(const QPoly& f, const IrreducibilityCertificate& cert);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const QPoly& f, const FactorLimits& limits = {});

// --- factorization over Q -------------------------------------------------

/// Squarefree test. A prime not dividing the leading coefficient for which
/// the reduction is squarefree settles it; exact gcd is the fallback.
bool is_squarefree_q(const QPoly& f);

/// Squarefree decomposition of a nonzero rational polynomial: monic pairwise
/// coprime parts with their multiplicities.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

/// Zassenhaus: squarefree reduction, modular factorization, Hensel lifting
/// past the Mignotte bound, recombination by subset search.
Factorization<Rational> factor_q(const QPoly& f, const FactorLimits& limits = {});

/// Irreducible factors of a primitive squarefree integer polynomial,
/// primitive with positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

/// 1 + t + ... + t^(p-1).
ZPoly cyclotomic_p(std::uint64_t p);

}  // namespace galois
