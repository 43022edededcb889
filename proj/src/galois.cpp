#include "galois/galois.hpp"

#include <algorithm>
#include <set>

namespace galois {
namespace {

template <class K>
Matrix<K> monomial_matrix(const TowerPtr<K>& tower, const std::vector<TowerElem<K>>& images) {
  std::vector<TowerElem<K>> columns{tower->one()};
  for (int level = 1; level <= tower->depth(); ++level) {
    const std::size_t d = tower->ancestor(level)->level_degree();
    const TowerElem<K>& g = images[static_cast<std::size_t>(level - 1)];
    std::vector<TowerElem<K>> next;
    next.reserve(columns.size() * d);
    TowerElem<K> power = tower->one();
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& c : columns) next.push_back(c * power);
      power = power * g;
    }
    columns = std::move(next);
  }
  std::vector<std::vector<K>> cols;
  for (const auto& c : columns) cols.push_back(c.coords());
  return Matrix<K>::from_columns(cols, tower->degree(), tower->zero());
}

template <class K>
int root_index(const std::vector<TowerElem<K>>& roots, const TowerElem<K>& x) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] == x) return static_cast<int>(i);
  }
  return -1;
}

template <class K>
void extend_images(const TowerPtr<K>& tower, const std::vector<TowerElem<K>>& roots,
                   std::vector<TowerElem<K>>& images, std::vector<std::vector<TowerElem<K>>>& out) {
  const int level = static_cast<int>(images.size()) + 1;
  if (level > tower->depth()) {
    out.push_back(images);
    return;
  }
  const Poly<TowerElem<K>> mapped = substitute_poly(tower->ancestor(level)->min_poly(), images, tower);
  for (const auto& r : roots) {
    if (!eval(mapped, r).is_zero()) continue;
    images.push_back(r);
    extend_images(tower, roots, images, out);
    images.pop_back();
  }
}

}  // namespace

template <class K>
GaloisGroup<K>::GaloisGroup(std::shared_ptr<const SplittingField<K>> field, std::vector<Automorphism<K>> elements)
    : field_(std::move(field)),
      elements_(std::move(elements)),
      group_(FiniteGroup::from_permutations([this] {
        std::vector<Permutation> perms;
        for (const auto& e : elements_) perms.push_back(e.root_perm);
        return perms;
      }())) {}

template <class K>
std::vector<Permutation> GaloisGroup<K>::permutations() const {
  std::vector<Permutation> perms;
  for (const auto& e : elements_) perms.push_back(e.root_perm);
  return perms;
}

template <class K>
GaloisGroup<K> automorphisms(const SplittingField<K>& sf) {
  const TowerPtr<K>& tower = sf.field;
  std::vector<TowerElem<K>> roots;
  for (const auto& r : sf.roots) roots.push_back(tower->embed(r));

  std::vector<std::vector<TowerElem<K>>> choices;
  std::vector<TowerElem<K>> images;
  extend_images(tower, roots, images, choices);

  std::vector<Automorphism<K>> elements;
  for (auto& imgs : choices) {
    Automorphism<K> phi;
    phi.matrix = monomial_matrix(tower, imgs);
    for (const auto& r : roots) {
      const int j = root_index(roots, tower->element(phi.matrix.apply(r.coords())));
      check_invariant(j >= 0, "automorphism does not permute the roots");
      phi.root_perm.push_back(j);
    }
    phi.generator_images = std::move(imgs);
    elements.push_back(std::move(phi));
  }
  check_invariant(elements.size() == tower->degree(),
                  "found " + std::to_string(elements.size()) + " automorphisms for a field of degree " +
                      std::to_string(tower->degree()));
  std::sort(elements.begin(), elements.end(),
            [](const Automorphism<K>& a, const Automorphism<K>& b) { return a.root_perm < b.root_perm; });
  return GaloisGroup<K>(std::make_shared<const SplittingField<K>>(sf), std::move(elements));
}

template <class K>
TowerElem<K> apply(const Automorphism<K>& phi, const TowerElem<K>& x, const TowerPtr<K>& field) {
  const TowerElem<K> y = field->embed(x);
  return field->element(phi.matrix.apply(y.coords()));
}

template <class K>
bool is_transitive(const GaloisGroup<K>& g) {
  return orbits(g).size() == 1;
}

template <class K>
std::vector<std::vector<int>> orbits(const GaloisGroup<K>& g) {
  const std::size_t n = g.roots().size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::set<int> orbit;
    for (const auto& e : g.elements()) orbit.insert(e.root_perm[i]);
    for (int j : orbit) seen[static_cast<std::size_t>(j)] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

template <class K>
std::string isomorphism_type(const GaloisGroup<K>& g) {
  return isomorphism_type(g.group(), g.permutations());
}

template <class K>
std::string subgroup_type(const GaloisGroup<K>& g, const Subgroup& h) {
  std::vector<Permutation> action;
  for (int i : h.members) action.push_back(g.element(i).root_perm);
  return isomorphism_type(g.group().restrict_to(h), action);
}

#define GALOIS_INSTANTIATE_GALOIS(K)                                                        \
  template class GaloisGroup<K>;                                                            \
  template GaloisGroup<K> automorphisms(const SplittingField<K>&);                          \
  template TowerElem<K> apply(const Automorphism<K>&, const TowerElem<K>&, const TowerPtr<K>&); \
  template bool is_transitive(const GaloisGroup<K>&);                                       \
  template std::vector<std::vector<int>> orbits(const GaloisGroup<K>&);                     \
  template std::string isomorphism_type(const GaloisGroup<K>&);                             \
  template std::string subgroup_type(const GaloisGroup<K>&, const Subgroup&);

GALOIS_INSTANTIATE_GALOIS(Rational)
GALOIS_INSTANTIATE_GALOIS(FpScalar)

}  // namespace galois
