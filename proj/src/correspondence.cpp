#include "galois/correspondence.hpp"

#include <algorithm>

namespace galois {
namespace {

template <class K>
std::vector<K> multiply_coords(const TowerPtr<K>& tower, const std::vector<K>& x, const std::vector<K>& y) {
  return tower->multiply(x, y);
}

/// Values 0, 1, -1, 2, -2, ... up to `bound`, as scalars like `zero`.
template <class K>
std::vector<K> small_values(const K& zero, long bound) {
  std::vector<K> out{scalar_like(zero, 0)};
  for (long v = 1; v <= bound; ++v) {
    out.push_back(scalar_like(zero, v));
    out.push_back(scalar_like(zero, -v));
  }
  return out;
}

template <class K>
long coefficient_bound(const K& zero) {
  const std::uint64_t p = characteristic(zero);
  if (p == 0) return 12;
  return static_cast<long>(std::max<std::uint64_t>(1, p / 2));
}

template <class K>
Subspace<K> fixed_space(const Subgroup& h, const GaloisGroup<K>& g) {
  const TowerPtr<K>& tower = g.tower();
  const std::size_t d = tower->degree();
  const FiniteGroup sub = g.group().restrict_to(h);
  std::vector<int> gens;
  for (int i : sub.generators()) gens.push_back(h.members[static_cast<std::size_t>(i)]);
  Matrix<K> stacked(std::max<std::size_t>(1, gens.size()) * d, d, tower->zero());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix<K>& a = g.element(gens[k]).matrix;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        K v = a(i, j);
        if (i == j) v -= scalar_like(tower->zero(), 1);
        stacked(k * d + i, j) = v;
      }
    }
  }
  return Subspace<K>::span(d, nullspace(stacked), tower->zero());
}

template <class K>
bool fixes(const Automorphism<K>& phi, const Subspace<K>& space) {
  for (const auto& b : space.basis()) {
    if (phi.matrix.apply(b) != b) return false;
  }
  return true;
}

}  // namespace

template <class K>
bool Subfield<K>::contains(const TowerElem<K>& x) const {
  return space.contains(ambient->embed(x).coords());
}

template <class K>
Subfield<K> subfield_from_space(const TowerPtr<K>& ambient, Subspace<K> space) {
  const std::size_t e = space.dim();
  check_invariant(e >= 1, "subfield of dimension zero");
  const TowerPtr<K> base = ambient->base_tower();
  Subfield<K> out{ambient, std::move(space), ambient->one(), Poly<K>()};
  if (e == 1) {
    out.primitive_min_poly = min_poly(out.primitive);
    return out;
  }
  const auto& basis = out.space.basis();
  // The first echelon vector is 1, which generates nothing.
  const std::size_t k = e - 1;
  auto accept = [&](const TowerElem<K>& x) {
    if (relative_degree(x, *base) != e) return false;
    out.primitive = x;
    out.primitive_min_poly = min_poly(x);
    return true;
  };
  for (std::size_t i = 1; i < e; ++i) {
    if (accept(ambient->element(basis[i]))) return out;
  }
  for (std::size_t i = 1; i < e; ++i) {
    for (std::size_t j = i + 1; j < e; ++j) {
      std::vector<K> coords = basis[i];
      for (std::size_t c = 0; c < coords.size(); ++c) coords[c] += basis[j][c];
      if (accept(ambient->element(std::move(coords)))) return out;
    }
  }
  const auto values = small_values(ambient->zero(), coefficient_bound(ambient->zero()));
  const long max_norm = static_cast<long>(values.size() / 2);
  for (long n = 1; n <= max_norm; ++n) {
    const std::size_t width = std::min(static_cast<std::size_t>(2 * n + 1), values.size());
    std::vector<std::size_t> idx(k, 0);
    for (bool more = true; more;) {
      long norm = 0;
      for (auto i : idx) norm = std::max(norm, static_cast<long>((i + 1) / 2));
      if (norm == n) {
        std::vector<K> coords(ambient->degree(), ambient->zero());
        for (std::size_t j = 0; j < k; ++j) {
          if (is_zero(values[idx[j]])) continue;
          for (std::size_t c = 0; c < coords.size(); ++c) coords[c] += values[idx[j]] * basis[j + 1][c];
        }
        if (accept(ambient->element(std::move(coords)))) return out;
      }
      more = false;
      for (std::size_t pos = k; pos-- > 0;) {
        if (++idx[pos] < width) {
          more = true;
          break;
        }
        idx[pos] = 0;
      }
    }
  }
  fail(ErrorKind::SearchExhausted, "no primitive element found for a subfield of dimension " + std::to_string(e));
}

template <class K>
Subfield<K> subfield_generated(const TowerPtr<K>& ambient, const std::vector<TowerElem<K>>& generators) {
  const std::size_t d = ambient->degree();
  std::vector<std::vector<K>> vectors{ambient->one().coords()};
  Subspace<K> space = Subspace<K>::span(d, vectors, ambient->zero());
  for (;;) {
    for (const auto& gen : generators) {
      const std::vector<K> gc = ambient->embed(gen).coords();
      for (const auto& b : space.basis()) vectors.push_back(multiply_coords(ambient, gc, b));
    }
    Subspace<K> next = Subspace<K>::span(d, vectors, ambient->zero());
    if (next.dim() == space.dim()) break;
    space = std::move(next);
    vectors = space.basis();
  }
  return subfield_from_space(ambient, std::move(space));
}

template <class K>
Subfield<K> fixed_field(const Subgroup& h, const GaloisGroup<K>& g) {
  Subspace<K> space = fixed_space(h, g);
  check_invariant(space.dim() * h.order() == g.tower()->degree(),
                  "fixed field of a subgroup of order " + std::to_string(h.order()) + " has dimension " +
                      std::to_string(space.dim()));
  return subfield_from_space(g.tower(), std::move(space));
}

template <class K>
Subgroup gal_over(const Subfield<K>& l, const GaloisGroup<K>& g) {
  std::vector<int> members;
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    if (fixes(g.element(i), l.space)) members.push_back(i);
  }
  return Subgroup{std::move(members)};
}

template <class K>
bool is_normal_intermediate(const Subfield<K>& l, const GaloisGroup<K>& g) {
  for (int i : g.group().generators()) {
    for (const auto& b : l.space.basis()) {
      if (!l.space.contains(g.element(i).matrix.apply(b))) return false;
    }
  }
  return true;
}

template <class K>
bool CorrespondenceReport<K>::ok() const {
  if (!order_reversing) return false;
  for (const auto& e : entries) {
    if (!e.gal_over_matches || !e.fixed_field_matches || !e.degree_matches) return false;
  }
  return true;
}

template <class K>
CorrespondenceReport<K> verify_correspondence(const GaloisGroup<K>& g) {
  CorrespondenceReport<K> report;
  const auto subgroups = g.group().subgroups();
  for (const auto& h : subgroups) {
    Subfield<K> f = fixed_field(h, g);
    const Subgroup back = gal_over(f, g);
    const bool fixed_again = fixed_space(back, g) == f.space;
    const bool degree_ok = h.order() * f.dim() == g.tower()->degree();
    const bool normal = g.group().is_normal(h);
    report.entries.push_back({h, normal, std::move(f), back == h, fixed_again, degree_ok});
  }
  report.order_reversing = true;
  for (const auto& a : report.entries) {
    for (const auto& b : report.entries) {
      const bool sub = std::includes(b.subgroup.members.begin(), b.subgroup.members.end(), a.subgroup.members.begin(),
                                     a.subgroup.members.end());
      const bool super_field = b.fixed.space.is_subspace_of(a.fixed.space);
      if (sub != super_field) report.order_reversing = false;
    }
  }
  return report;
}

template <class K>
QuotientReport quotient_check(const Subfield<K>& l, const GaloisGroup<K>& g) {
  if (!is_normal_intermediate(l, g)) fail(ErrorKind::NotNormal, "intermediate field is not normal over the base");
  QuotientReport report;
  report.normal_subgroup = gal_over(l, g);
  const FiniteGroup q = g.group().quotient(report.normal_subgroup);
  report.quotient_order = q.order();
  report.quotient_type = abstract_type(q);

  // Restrictions to L as matrices in L's echelon coordinates.
  const std::size_t e = l.dim();
  std::vector<Matrix<K>> restrictions;
  for (const auto& phi : g.elements()) {
    Matrix<K> r(e, e, g.tower()->zero());
    for (std::size_t j = 0; j < e; ++j) {
      const auto c = l.space.coordinates(phi.matrix.apply(l.space.basis()[j]));
      for (std::size_t i = 0; i < e; ++i) r(i, j) = c[i];
    }
    if (std::find(restrictions.begin(), restrictions.end(), r) == restrictions.end()) restrictions.push_back(r);
  }
  std::vector<std::vector<int>> table(restrictions.size(), std::vector<int>(restrictions.size()));
  for (std::size_t a = 0; a < restrictions.size(); ++a) {
    for (std::size_t b = 0; b < restrictions.size(); ++b) {
      const auto it = std::find(restrictions.begin(), restrictions.end(), restrictions[a] * restrictions[b]);
      check_invariant(it != restrictions.end(), "restrictions to a normal subfield are not closed");
      table[a][b] = static_cast<int>(it - restrictions.begin());
    }
  }
  report.restriction_order = restrictions.size();
  report.restriction_type = abstract_type(FiniteGroup(std::move(table)));
  return report;
}

#define GALOIS_INSTANTIATE_CORRESPONDENCE(K)                                                            \
  template struct Subfield<K>;                                                                          \
  template struct CorrespondenceReport<K>;                                                              \
  template Subfield<K> subfield_generated(const TowerPtr<K>&, const std::vector<TowerElem<K>>&);        \
  template Subfield<K> subfield_from_space(const TowerPtr<K>&, Subspace<K>);                            \
  template Subfield<K> fixed_field(const Subgroup&, const GaloisGroup<K>&);                             \
  template Subgroup gal_over(const Subfield<K>&, const GaloisGroup<K>&);                                \
  template bool is_normal_intermediate(const Subfield<K>&, const GaloisGroup<K>&);                      \
  template CorrespondenceReport<K> verify_correspondence(const GaloisGroup<K>&);                        \
  template QuotientReport quotient_check(const Subfield<K>&, const GaloisGroup<K>&);

GALOIS_INSTANTIATE_CORRESPONDENCE(Rational)
GALOIS_INSTANTIATE_CORRESPONDENCE(FpScalar)

}  // namespace galois
