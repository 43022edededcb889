#pragma once

// Classical verdicts on top of the engine: real-root counting, solvability by
// radicals, and ruler-and-compass constructibility.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galois/correspondence.hpp"
#include "galois/factor.hpp"
#include "galois/splitting.hpp"

namespace galois {

/// -f_{k-1} mod f_k, starting from f and f'. Taken on the squarefree part.
std::vector<QPoly> sturm_chain(const QPoly& f);

/// Distinct real roots by sign variations of the Sturm chain at -inf and +inf.
/// ZeroPolynomial for f = 0.
int count_real_roots(const QPoly& f);

/// Distinct real roots in the half-open interval (a, b].
int count_real_roots_between(const QPoly& f, const Rational& a, const Rational& b);

/// p when f is irreducible of prime degree p with exactly p - 2 real roots,
/// which forces the Galois group to be S_p.
std::optional<std::uint64_t> sp_criterion(const QPoly& f);

enum class Evidence {
  SpCriterion,    // irreducible of prime degree p >= 5 with p - 2 real roots
  DegreeBound,    // degree <= 4, so the group sits inside S4
  GroupComputed,  // splitting field built and the group tested directly
};

struct SolvabilityVerdict {
  QPoly input;
  bool solvable;
  Evidence evidence;
  std::uint64_t prime = 0;     // SpCriterion
  int real_roots = 0;          // SpCriterion
  std::string group_type;      // S_p for SpCriterion, the computed type otherwise
  std::size_t group_order = 0;
  std::vector<std::size_t> derived_series;  // orders, GroupComputed only
};

std::string evidence_name(Evidence e);

/// The Sp route, then the degree bound, then the group of the depressed
/// polynomial. DegreeCap when the splitting field passes the cap.
SolvabilityVerdict solvable_by_radicals(const QPoly& f, const SplittingLimits& limits = {});

/// Always builds the splitting field of the depressed polynomial.
SolvabilityVerdict solvable_by_group(const QPoly& f, const SplittingLimits& limits = {});

/// f(t - a_{n-1}/(n a_n)) made monic: same splitting field, no t^{n-1} term.
QPoly depressed(const QPoly& f);

struct CyclotomicCheck {
  int n;
  std::size_t order;
  bool abelian;
};

struct KummerCheck {
  int n;
  long a;
  std::size_t base_degree;    // [Q(roots of unity) : Q] inside the splitting field
  std::size_t order;          // |Gal(M : Q(roots of unity))|
  bool abelian;
};

struct KummerReport {
  std::vector<CyclotomicCheck> cyclotomic;
  std::vector<KummerCheck> radical;
  bool ok() const;
};

/// Gal(t^n - 1) for n <= max_n, and Gal(t^n - a) over the n-th roots of unity
/// for the given pairs.
KummerReport kummer_abelian_checks(int max_n = 12,
                                   const std::vector<std::pair<int, long>>& pairs = {{2, 2}, {3, 2}, {4, 2}, {5, 2}});

enum class Constructibility {
  NotConstructible,
  NecessaryConditionHolds,  // degree is a power of 2; not a proof of constructibility
};

struct ConstructibilityVerdict {
  std::string target;
  QPoly min_poly;
  int degree;
  Constructibility verdict;
};

/// NotIrreducible unless m is irreducible over Q.
ConstructibilityVerdict constructible_degree_check(const QPoly& m, std::string target = "");

/// The regular n-gon passes the Fermat-prime rule: the odd part of n is a
/// product of distinct Fermat primes. False for n < 3.
bool ngon_constructible(std::uint64_t n);

struct ClassicProblem {
  std::string name;
  bool impossible;
  std::optional<ConstructibilityVerdict> degree_check;
  std::string axiom;  // nonempty when the verdict rests on an assumed fact
};

/// Trisecting 60 degrees, duplicating the cube, squaring the circle.
std::vector<ClassicProblem> classic_problems();

}  // namespace galois
