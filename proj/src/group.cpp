#include "galois/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "galois/errors.hpp"

namespace galois {

Permutation compose(const Permutation& a, const Permutation& b) {
  check_invariant(a.size() == b.size(), "compose: permutations of different degrees");
  Permutation r(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Permutation invert(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool is_even(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len > 0) transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

bool Subgroup::contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  check_invariant(n > 0, "group: empty table");
  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    check_invariant(table_[a].size() == n, "group: table is not square");
    check_invariant(table_[0][a] == static_cast<int>(a) && table_[a][0] == static_cast<int>(a),
                    "group: index 0 is not the identity");
    for (std::size_t b = 0; b < n; ++b) {
      const int c = table_[a][b];
      check_invariant(c >= 0 && static_cast<std::size_t>(c) < n, "group: table entry out of range");
      if (c == 0) inverse_[a] = static_cast<int>(b);
    }
    check_invariant(inverse_[a] >= 0, "group: element without inverse");
  }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& elements) {
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  check_invariant(index.size() == elements.size(), "group: repeated permutation");
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto it = index.find(compose(elements[a], elements[b]));
      check_invariant(it != index.end(), "group: permutations not closed under composition");
      table[a][b] = it->second;
    }
  }
  return FiniteGroup(std::move(table));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_associative() const {
  const int n = static_cast<int>(order());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) return false;
      }
    }
  }
  return true;
}

Subgroup FiniteGroup::whole() const {
  Subgroup h;
  h.members.resize(order());
  std::iota(h.members.begin(), h.members.end(), 0);
  return h;
}

Subgroup FiniteGroup::trivial() const { return Subgroup{{0}}; }

Subgroup FiniteGroup::generated(const std::vector<int>& generators) const {
  std::vector<bool> in(order(), false);
  std::vector<int> members{0};
  in[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : generators) {
      const int y = multiply(x, g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& members) const {
  std::vector<int> s = members;
  std::sort(s.begin(), s.end());
  if (s.empty() || s[0] != 0 || std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  if (s.back() >= static_cast<int>(order())) return false;
  for (int a : s) {
    for (int b : s) {
      if (!std::binary_search(s.begin(), s.end(), multiply(a, b))) return false;
    }
  }
  return true;
}

Subgroup FiniteGroup::subgroup(std::vector<int> members) const {
  if (!is_subgroup(members)) fail(ErrorKind::NotASubgroup, "set is not a subgroup");
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

std::vector<Subgroup> FiniteGroup::subgroups(std::size_t cap) const {
  if (order() > cap) {
    fail(ErrorKind::OrderCap, "subgroup lattice of a group of order " + std::to_string(order()) +
                                  " exceeds the cap " + std::to_string(cap));
  }
  std::set<std::vector<int>> found;
  std::vector<Subgroup> list;
  for (int g = 0; g < static_cast<int>(order()); ++g) {
    Subgroup h = generated({g});
    if (found.insert(h.members).second) list.push_back(std::move(h));
  }
  for (std::size_t done = 0; done < list.size();) {
    const std::size_t end = list.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<int> gens = list[i].members;
        gens.insert(gens.end(), list[j].members.begin(), list[j].members.end());
        Subgroup h = generated(gens);
        if (found.insert(h.members).second) list.push_back(std::move(h));
      }
    }
    done = end;
  }
  std::sort(list.begin(), list.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return list;
}

bool FiniteGroup::is_normal(const Subgroup& h) const {
  if (!is_subgroup(h.members)) fail(ErrorKind::NotASubgroup, "normality test of a non-subgroup");
  for (int g = 0; g < static_cast<int>(order()); ++g) {
    for (int x : h.members) {
      if (!h.contains(multiply(multiply(g, x), inverse(g)))) return false;
    }
  }
  return true;
}

Subgroup FiniteGroup::commutator_subgroup(const Subgroup& h) const {
  std::set<int> commutators;
  for (int a : h.members) {
    for (int b : h.members) commutators.insert(multiply(multiply(a, b), multiply(inverse(a), inverse(b))));
  }
  return generated(std::vector<int>(commutators.begin(), commutators.end()));
}

std::vector<Subgroup> FiniteGroup::derived_series() const {
  std::vector<Subgroup> series{whole()};
  for (;;) {
    Subgroup next = commutator_subgroup(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool FiniteGroup::is_solvable() const { return derived_series().back().order() == 1; }

std::vector<int> FiniteGroup::generators() const {
  std::vector<int> candidates(order());
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [this](int a, int b) { return element_order(a) > element_order(b); });
  std::vector<int> gens;
  Subgroup span = trivial();
  for (int g : candidates) {
    if (span.order() == order()) break;
    if (span.contains(g)) continue;
    gens.push_back(g);
    span = generated(gens);
  }
  return gens;
}

FiniteGroup FiniteGroup::restrict_to(const Subgroup& h) const {
  if (!is_subgroup(h.members)) fail(ErrorKind::NotASubgroup, "restriction to a non-subgroup");
  std::map<int, int> index;
  for (std::size_t i = 0; i < h.members.size(); ++i) index[h.members[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(h.order(), std::vector<int>(h.order()));
  for (std::size_t a = 0; a < h.order(); ++a) {
    for (std::size_t b = 0; b < h.order(); ++b) table[a][b] = index.at(multiply(h.members[a], h.members[b]));
  }
  return FiniteGroup(std::move(table));
}

std::vector<std::vector<int>> FiniteGroup::cosets(const Subgroup& n) const {
  std::vector<int> coset_of(order(), -1);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < static_cast<int>(order()); ++g) {
    if (coset_of[static_cast<std::size_t>(g)] >= 0) continue;
    std::vector<int> c;
    for (int x : n.members) {
      const int y = multiply(g, x);
      coset_of[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
      c.push_back(y);
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

FiniteGroup FiniteGroup::quotient(const Subgroup& n) const {
  if (!is_normal(n)) fail(ErrorKind::NotNormal, "quotient by a subgroup that is not normal");
  const auto cs = cosets(n);
  std::vector<int> coset_of(order());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (int g : cs[i]) coset_of[static_cast<std::size_t>(g)] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> table(cs.size(), std::vector<int>(cs.size()));
  for (std::size_t a = 0; a < cs.size(); ++a) {
    for (std::size_t b = 0; b < cs.size(); ++b) {
      table[a][b] = coset_of[static_cast<std::size_t>(multiply(cs[a][0], cs[b][0]))];
    }
  }
  return FiniteGroup(std::move(table));
}

namespace {

std::map<int, int> order_counts(const FiniteGroup& g) {
  std::map<int, int> counts;
  for (int a = 0; a < static_cast<int>(g.order()); ++a) ++counts[g.element_order(a)];
  return counts;
}

/// Invariant factors of an abelian group from its element orders: for each
/// prime p the number of elements killed by p^k is p^(sum min(k, e_i)).
std::vector<long> invariant_factors(const FiniteGroup& g) {
  const long n = static_cast<long>(g.order());
  std::vector<int> orders;
  for (int a = 0; a < static_cast<int>(g.order()); ++a) orders.push_back(g.element_order(a));
  std::vector<std::vector<int>> exponents;  // per prime, descending
  std::vector<long> primes;
  long rest = n;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    int top = 0;
    while (rest % p == 0) {
      rest /= p;
      ++top;
    }
    primes.push_back(p);
    std::vector<int> s(static_cast<std::size_t>(top) + 1, 0);  // s[k] = log_p #{x : x^(p^k) = 1}
    long pk = 1;
    for (int k = 1; k <= top; ++k) {
      pk *= p;
      long count = 0;
      for (int o : orders) count += (pk % o == 0) ? 1 : 0;
      int e = 0;
      for (long c = count; c > 1; c /= p) ++e;
      s[static_cast<std::size_t>(k)] = e;
    }
    std::vector<int> parts;  // number of cyclic factors of order >= p^k is s[k] - s[k-1]
    for (int k = top; k >= 1; --k) {
      const int at_least_k = s[static_cast<std::size_t>(k)] - s[static_cast<std::size_t>(k) - 1];
      const int at_least_next = k < top ? s[static_cast<std::size_t>(k) + 1] - s[static_cast<std::size_t>(k)] : 0;
      for (int i = 0; i < at_least_k - at_least_next; ++i) parts.push_back(k);
    }
    exponents.push_back(std::move(parts));
  }
  std::size_t width = 0;
  for (const auto& e : exponents) width = std::max(width, e.size());
  std::vector<long> factors(width, 1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < exponents[i].size(); ++j) {
      for (int k = 0; k < exponents[i][j]; ++k) factors[j] *= primes[i];
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

bool is_dihedral(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  if (n < 6 || n % 2 != 0 || g.is_abelian()) return false;
  for (int r = 0; r < n; ++r) {
    if (g.element_order(r) != n / 2) continue;
    const Subgroup rot = g.generated({r});
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = rot.contains(x) || g.element_order(x) == 2;
    if (ok) return true;
  }
  return false;
}

bool transitive(const std::vector<Permutation>& action) {
  if (action.empty() || action[0].empty()) return false;
  std::set<int> images;
  for (const auto& p : action) images.insert(p[0]);
  return images.size() == action[0].size();
}

long factorial(std::size_t k) {
  long f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace

std::string abstract_type(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 24 && n != 60 && n != 120) {
    fail(ErrorKind::OrderCap, "no isomorphism type table for order " + std::to_string(n));
  }
  if (g.is_abelian()) {
    std::string name;
    for (long f : invariant_factors(g)) name += (name.empty() ? "C" : " x C") + std::to_string(f);
    return name.empty() ? "C1" : name;
  }
  const auto counts = order_counts(g);
  auto count = [&](int o) {
    auto it = counts.find(o);
    return it == counts.end() ? 0 : it->second;
  };
  if (n == 6) return "S3";
  if (n == 8 && count(2) == 1) return "Q8";
  if (is_dihedral(g)) return "D" + std::to_string(n / 2);
  if (n == 12 && count(2) == 3 && count(3) == 8) return "A4";
  if (n == 24 && count(2) == 9 && count(3) == 8 && count(4) == 6) return "S4";
  if (n == 20 && count(2) == 5 && count(4) == 10 && count(5) == 4) return "F20";
  if (n == 60 && count(2) == 15 && count(3) == 20 && count(5) == 24) return "A5";
  if (n == 120 && count(2) == 25 && count(3) == 20 && count(4) == 30 && count(5) == 24 && count(6) == 20) return "S5";
  return "unidentified group of order " + std::to_string(n);
}

std::string isomorphism_type(const FiniteGroup& g, const std::vector<Permutation>& action) {
  const std::size_t k = action.empty() ? 0 : action[0].size();
  if (k >= 3 && action.size() == g.order() && transitive(action)) {
    if (static_cast<long>(g.order()) == factorial(k)) return "S" + std::to_string(k);
    bool all_even = true;
    for (const auto& p : action) all_even = all_even && is_even(p);
    // A3 is cyclic and keeps its abstract name C3.
    if (k >= 4 && all_even && static_cast<long>(g.order()) * 2 == factorial(k)) return "A" + std::to_string(k);
  }
  return abstract_type(g);
}

}  // namespace galois
