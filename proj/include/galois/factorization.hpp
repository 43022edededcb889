#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "galois/poly.hpp"

namespace galois {

/// unit * prod factor^multiplicity, every factor monic irreducible, listed in
/// canonical polynomial order.
template <class F>
struct Factorization {
  F unit{};
  std::vector<std::pair<Poly<F>, int>> factors;

  Poly<F> expand() const {
    Poly<F> acc = Poly<F>::constant(unit);
    for (const auto& [g, m] : factors) {
      for (int i = 0; i < m; ++i) acc = acc * g;
    }
    return acc;
  }

  int factor_count() const {
    int n = 0;
    for (const auto& fm : factors) n += fm.second;
    return n;
  }

  bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }

  void canonicalize() {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return compare_polys(a.first, b.first) < 0; });
    // Merge equal factors that arrived from different squarefree parts.
    std::vector<std::pair<Poly<F>, int>> merged;
    for (auto& fm : factors) {
      if (!merged.empty() && merged.back().first == fm.first) {
        merged.back().second += fm.second;
      } else {
        merged.push_back(std::move(fm));
      }
    }
    factors = std::move(merged);
  }
};

}  // namespace galois
