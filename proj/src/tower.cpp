#include "galois/tower.hpp"

#include <algorithm>

namespace galois {

// --- elements ---------------------------------------------------------------

template <class K>
TowerElem<K>::TowerElem(TowerPtr<K> tower, std::vector<K> coords) : tower_(std::move(tower)), c_(std::move(coords)) {
  if (!tower_) return;
  if (c_.size() > tower_->degree()) fail(ErrorKind::TowerMismatch, "coordinate vector longer than the tower degree");
  c_.resize(tower_->degree(), tower_->zero());
}

template <class K>
TowerElem<K>::TowerElem(TowerPtr<K> tower, long n) : tower_(std::move(tower)) {
  c_.assign(tower_->degree(), tower_->zero());
  c_[0] = scalar_like(tower_->zero(), n);
}

template <class K>
TowerElem<K> TowerElem<K>::from_base(TowerPtr<K> tower, const K& c) {
  std::vector<K> v(tower->degree(), tower->zero());
  v[0] = c;
  return TowerElem(std::move(tower), std::move(v));
}

template <class K>
bool TowerElem<K>::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const K& x) { return galois::is_zero(x); });
}

template <class K>
bool TowerElem<K>::is_one() const {
  if (c_.empty() || !galois::is_one(c_[0])) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const K& x) { return galois::is_zero(x); });
}

template <class K>
bool TowerElem<K>::is_base() const {
  return c_.size() <= 1 || std::all_of(c_.begin() + 1, c_.end(), [](const K& x) { return galois::is_zero(x); });
}

template <class K>
K TowerElem<K>::base_value() const {
  if (!is_base()) fail(ErrorKind::TowerMismatch, "element does not lie in the base field");
  return c_.empty() ? K{} : c_[0];
}

template <class K>
void TowerElem<K>::adopt(const TowerElem& o) {
  if (tower_ == o.tower_ || !o.tower_) return;
  if (!tower_) {
    tower_ = o.tower_;
    c_.assign(tower_->degree(), tower_->zero());
    return;
  }
  fail(ErrorKind::TowerMismatch, "elements of different towers");
}

template <class K>
TowerElem<K>& TowerElem<K>::operator+=(const TowerElem& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

template <class K>
TowerElem<K>& TowerElem<K>::operator-=(const TowerElem& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

template <class K>
TowerElem<K> TowerElem<K>::operator-() const {
  TowerElem r = *this;
  for (auto& x : r.c_) x = negate(x);
  return r;
}

template <class K>
TowerElem<K> operator*(const TowerElem<K>& a, const TowerElem<K>& b) {
  if (!a.tower() || !b.tower()) {
    const auto& t = a.tower() ? a.tower() : b.tower();
    return t ? t->zero_element() : TowerElem<K>();
  }
  if (a.tower() != b.tower()) fail(ErrorKind::TowerMismatch, "elements of different towers");
  return TowerElem<K>(a.tower(), a.tower()->multiply(a.coords(), b.coords()));
}

template <class K>
bool operator==(const TowerElem<K>& a, const TowerElem<K>& b) {
  if (!a.tower() || !b.tower()) return a.is_zero() && b.is_zero();
  return a.tower() == b.tower() && a.coords() == b.coords();
}

template <class K>
TowerElem<K> inverse(const TowerElem<K>& x) {
  if (x.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in a tower");
  const Tower<K>& t = *x.tower();
  if (t.depth() == 0) return t.from_base(inverse(x.coords()[0]));
  if (x.is_base()) return t.from_base(inverse(x.base_value()));
  const TowerPtr<K>& parent = t.parent();
  const std::size_t np = parent->degree();
  std::vector<TowerElem<K>> blocks;
  for (std::size_t j = 0; j < t.level_degree(); ++j) {
    std::vector<K> c(x.coords().begin() + static_cast<long>(j * np), x.coords().begin() + static_cast<long>((j + 1) * np));
    blocks.emplace_back(parent, std::move(c));
  }
  auto bz = gcd_ext(Poly<TowerElem<K>>(std::move(blocks)), t.min_poly());
  check_invariant(bz.d.deg() == 0, "tower inverse: element shares a factor with the minimal polynomial");
  std::vector<K> out(t.degree(), t.zero());
  for (std::size_t j = 0; j < bz.a.size(); ++j) {
    const auto& c = bz.a[j].coords();
    std::copy(c.begin(), c.end(), out.begin() + static_cast<long>(j * np));
  }
  return TowerElem<K>(x.tower(), std::move(out));
}

template <class K>
TowerElem<K> pow(const TowerElem<K>& x, const Integer& e) {
  TowerElem<K> result = x.tower()->one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * x;
  }
  return result;
}

// --- towers -----------------------------------------------------------------

template <class K>
Tower<K>::Tower(Private, const K& zero, std::string label) : label_(std::move(label)), zero_(zero) {}

template <class K>
Tower<K>::Tower(Private, TowerPtr<K> parent, Poly<TowerElem<K>> min_poly, std::string label)
    : parent_(std::move(parent)), min_poly_(std::move(min_poly)), label_(std::move(label)) {
  if (min_poly_.is_zero()) fail(ErrorKind::ZeroPolynomial, "adjoining a root of the zero polynomial");
  if (min_poly_.deg() < 1) fail(ErrorKind::ConstantPolynomial, "adjoining a root of a constant");
  if (!min_poly_.is_monic()) fail(ErrorKind::NotMonic, "defining polynomial must be monic");
  zero_ = parent_->zero();
  depth_ = parent_->depth() + 1;
  level_degree_ = static_cast<std::size_t>(min_poly_.deg());
  degree_ = parent_->degree() * level_degree_;
  std::vector<TowerElem<K>> coeffs;
  for (std::size_t j = 0; j < min_poly_.size(); ++j) {
    TowerElem<K> c = parent_->embed(min_poly_[j]);
    if (j < level_degree_) min_poly_flat_.push_back(c.coords());
    coeffs.push_back(std::move(c));
  }
  min_poly_ = Poly<TowerElem<K>>(std::move(coeffs));
}

template <class K>
TowerPtr<K> Tower<K>::base(const K& zero) {
  const std::uint64_t p = galois::characteristic(zero);
  return std::make_shared<const Tower<K>>(Private{}, zero, p == 0 ? "Q" : "F" + std::to_string(p));
}

template <class K>
TowerPtr<K> Tower<K>::extend(const TowerPtr<K>& parent, const Poly<TowerElem<K>>& min_poly, std::string label) {
  return std::make_shared<const Tower<K>>(Private{}, parent, min_poly, std::move(label));
}

template <class K>
TowerPtr<K> Tower<K>::simple(const TowerPtr<K>& base, const Poly<K>& m, std::string label) {
  return extend(base, base->embed_base(m), std::move(label));
}

template <class K>
TowerPtr<K> Tower<K>::ancestor(int level) const {
  if (level < 0 || level > depth_) fail(ErrorKind::TowerMismatch, "no ancestor at level " + std::to_string(level));
  TowerPtr<K> t = this->shared_from_this();
  while (t->depth() > level) t = t->parent();
  return t;
}

template <class K>
bool Tower<K>::extends(const Tower& sub) const {
  const Tower* t = this;
  while (t != nullptr) {
    if (t == &sub) return true;
    t = t->parent_.get();
  }
  return false;
}

template <class K>
std::size_t Tower<K>::degree_over(const Tower& sub) const {
  if (!extends(sub)) fail(ErrorKind::TowerMismatch, "degree_over: not an intermediate tower");
  return degree_ / sub.degree();
}

template <class K>
TowerElem<K> Tower<K>::zero_element() const {
  return TowerElem<K>(this->shared_from_this(), std::vector<K>(degree_, zero_));
}

template <class K>
TowerElem<K> Tower<K>::one() const {
  return TowerElem<K>(this->shared_from_this(), 1L);
}

template <class K>
TowerElem<K> Tower<K>::from_base(const K& c) const {
  return TowerElem<K>::from_base(this->shared_from_this(), c);
}

template <class K>
TowerElem<K> Tower<K>::element(std::vector<K> coords) const {
  return TowerElem<K>(this->shared_from_this(), std::move(coords));
}

template <class K>
TowerElem<K> Tower<K>::generator(int level) const {
  if (level < 1 || level > depth_) fail(ErrorKind::TowerMismatch, "no generator at level " + std::to_string(level));
  TowerPtr<K> t = ancestor(level);
  if (t->level_degree() == 1) return embed(-t->min_poly()[0]);
  std::vector<K> c(t->degree(), zero_);
  c[t->parent()->degree()] = scalar_like(zero_, 1);
  return embed(TowerElem<K>(t, std::move(c)));
}

template <class K>
std::vector<TowerElem<K>> Tower<K>::generators() const {
  std::vector<TowerElem<K>> out;
  for (int k = 1; k <= depth_; ++k) out.push_back(generator(k));
  return out;
}

template <class K>
std::vector<std::string> Tower<K>::labels() const {
  std::vector<std::string> out(static_cast<std::size_t>(depth_));
  const Tower* t = this;
  while (t->depth_ > 0) {
    out[static_cast<std::size_t>(t->depth_ - 1)] = t->label_;
    t = t->parent_.get();
  }
  return out;
}

template <class K>
TowerElem<K> Tower<K>::embed(const TowerElem<K>& x) const {
  if (!x.tower()) return zero_element();
  if (x.tower().get() == this) return x;
  if (!extends(*x.tower())) fail(ErrorKind::TowerMismatch, "element does not belong to a sub-tower");
  std::vector<K> c = x.coords();
  c.resize(degree_, zero_);
  return element(std::move(c));
}

template <class K>
Poly<TowerElem<K>> Tower<K>::embed(const Poly<TowerElem<K>>& f) const {
  std::vector<TowerElem<K>> v;
  v.reserve(f.size());
  for (const auto& c : f.coefficients()) v.push_back(embed(c));
  return Poly<TowerElem<K>>(std::move(v));
}

template <class K>
Poly<TowerElem<K>> Tower<K>::embed_base(const Poly<K>& f) const {
  std::vector<TowerElem<K>> v;
  v.reserve(f.size());
  for (const auto& c : f.coefficients()) v.push_back(from_base(c));
  return Poly<TowerElem<K>>(std::move(v));
}

namespace {

template <class K>
bool all_zero(const K* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(v[i])) return false;
  }
  return true;
}

}  // namespace

template <class K>
std::vector<K> Tower<K>::multiply(const std::vector<K>& x, const std::vector<K>& y) const {
  if (depth_ == 0) return {x[0] * y[0]};
  const std::size_t d = level_degree_;
  const std::size_t np = parent_->degree();
  if (np == 1) {
    std::vector<K> prod(2 * d - 1, zero_);
    for (std::size_t i = 0; i < d; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (!is_zero(y[j])) prod[i + j] += x[i] * y[j];
      }
    }
    for (std::size_t m = 2 * d - 1; m-- > d;) {
      if (is_zero(prod[m])) continue;
      const K c = prod[m];
      for (std::size_t j = 0; j < d; ++j) {
        if (!is_zero(min_poly_flat_[j][0])) prod[m - d + j] -= c * min_poly_flat_[j][0];
      }
    }
    prod.resize(d);
    return prod;
  }
  auto block = [np](const std::vector<K>& v, std::size_t i) {
    return std::vector<K>(v.begin() + static_cast<long>(i * np), v.begin() + static_cast<long>((i + 1) * np));
  };
  std::vector<std::vector<K>> xb, yb;
  std::vector<bool> xz, yz;
  for (std::size_t i = 0; i < d; ++i) {
    xb.push_back(block(x, i));
    yb.push_back(block(y, i));
    xz.push_back(all_zero(xb.back().data(), np));
    yz.push_back(all_zero(yb.back().data(), np));
  }
  std::vector<std::vector<K>> prod(2 * d - 1, std::vector<K>(np, zero_));
  for (std::size_t i = 0; i < d; ++i) {
    if (xz[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (yz[j]) continue;
      auto t = parent_->multiply(xb[i], yb[j]);
      for (std::size_t k = 0; k < np; ++k) prod[i + j][k] += t[k];
    }
  }
  for (std::size_t m = 2 * d - 1; m-- > d;) {
    if (all_zero(prod[m].data(), np)) continue;
    const std::vector<K> c = prod[m];
    for (std::size_t j = 0; j < d; ++j) {
      if (all_zero(min_poly_flat_[j].data(), np)) continue;
      auto t = parent_->multiply(c, min_poly_flat_[j]);
      for (std::size_t k = 0; k < np; ++k) prod[m - d + j][k] -= t[k];
    }
  }
  std::vector<K> out;
  out.reserve(degree_);
  for (std::size_t i = 0; i < d; ++i) out.insert(out.end(), prod[i].begin(), prod[i].end());
  return out;
}

namespace {

/// Columns x^0, ..., x^(count-1) in flat coordinates.
template <class K>
Matrix<K> powers_matrix(const TowerElem<K>& x, std::size_t count) {
  const Tower<K>& t = *x.tower();
  Matrix<K> m(t.degree(), count, t.zero());
  TowerElem<K> p = t.one();
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < t.degree(); ++i) m(i, j) = p.coords()[i];
    if (j + 1 < count) p = p * x;
  }
  return m;
}

/// Minimal polynomial from the first dependency among the columns.
template <class K>
std::optional<Poly<K>> first_dependency(const Matrix<K>& powers) {
  auto ech = rref(powers);
  std::size_t j = 0;
  while (j < ech.pivots.size() && ech.pivots[j] == j) ++j;
  if (j >= powers.cols()) return std::nullopt;
  std::vector<K> c(j + 1, powers.zero());
  for (std::size_t i = 0; i < j; ++i) c[i] = negate(ech.reduced(i, j));
  c[j] = scalar_like(powers.zero(), 1);
  return Poly<K>(std::move(c));
}

}  // namespace

template <class K>
Poly<K> min_poly(const TowerElem<K>& x) {
  if (!x.tower()) fail(ErrorKind::TowerMismatch, "minimal polynomial of an element without a tower");
  const K& zero = x.tower()->zero();
  if (x.is_base()) return Poly<K>(std::vector<K>{negate(x.coords()[0]), scalar_like(zero, 1)});
  auto m = first_dependency(powers_matrix(x, x.tower()->degree() + 1));
  check_invariant(m.has_value(), "min_poly: powers never became dependent");
  return *m;
}

template <class K>
std::size_t relative_degree(const TowerElem<K>& x, const Tower<K>& sub) {
  const Tower<K>& t = *x.tower();
  if (!t.extends(sub)) fail(ErrorKind::TowerMismatch, "relative_degree: not an intermediate tower");
  const std::size_t ns = sub.degree();
  std::vector<TowerElem<K>> basis;
  for (std::size_t i = 0; i < ns; ++i) {
    std::vector<K> c(t.degree(), t.zero());
    c[i] = scalar_like(t.zero(), 1);
    basis.push_back(t.element(std::move(c)));
  }
  std::vector<std::vector<K>> vectors;
  for (const auto& b : basis) vectors.push_back(b.coords());
  std::size_t dim = ns;
  TowerElem<K> p = t.one();
  while (true) {
    p = p * x;
    for (const auto& b : basis) vectors.push_back((b * p).coords());
    const std::size_t next = Subspace<K>::span(t.degree(), vectors, t.zero()).dim();
    if (next == dim) break;
    dim = next;
  }
  return dim / ns;
}

template <class K>
bool lies_in(const TowerElem<K>& x, const Tower<K>& sub) {
  if (!x.tower()) return true;
  if (!x.tower()->extends(sub)) fail(ErrorKind::TowerMismatch, "lies_in: not an intermediate tower");
  for (std::size_t i = sub.degree(); i < x.coords().size(); ++i) {
    if (!is_zero(x.coords()[i])) return false;
  }
  return true;
}

template <class K>
TowerElem<K> substitute(const Tower<K>& source, const std::vector<K>& coords, const std::vector<TowerElem<K>>& images,
                        const TowerPtr<K>& target) {
  if (source.depth() == 0) return target->from_base(coords[0]);
  const std::size_t np = source.parent()->degree();
  const TowerElem<K>& g = images.at(static_cast<std::size_t>(source.depth() - 1));
  TowerElem<K> acc = target->zero_element();
  for (std::size_t j = source.level_degree(); j-- > 0;) {
    std::vector<K> block(coords.begin() + static_cast<long>(j * np), coords.begin() + static_cast<long>((j + 1) * np));
    acc = acc * g;
    if (!all_zero(block.data(), np)) acc += substitute(*source.parent(), block, images, target);
  }
  return acc;
}

template <class K>
Poly<TowerElem<K>> substitute_poly(const Poly<TowerElem<K>>& f, const std::vector<TowerElem<K>>& images,
                                   const TowerPtr<K>& target) {
  std::vector<TowerElem<K>> v;
  v.reserve(f.size());
  for (const auto& c : f.coefficients()) {
    v.push_back(c.tower() ? substitute(*c.tower(), c.coords(), images, target) : target->zero_element());
  }
  return Poly<TowerElem<K>>(std::move(v));
}

// --- primitive elements -------------------------------------------------------

namespace {

/// Integer coefficient vectors of length k with max norm exactly n, ordered
/// lexicographically in the value order 0, 1, -1, 2, -2, ...
void shell(std::size_t k, long n, std::vector<std::vector<long>>& out) {
  std::vector<long> values{0};
  for (long v = 1; v <= n; ++v) {
    values.push_back(v);
    values.push_back(-v);
  }
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<long> c;
    long norm = 0;
    for (auto i : idx) {
      c.push_back(values[i]);
      norm = std::max(norm, std::labs(values[i]));
    }
    if (norm == n) out.push_back(std::move(c));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < values.size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

template <class K>
const PrimitiveElement<K>& Tower<K>::primitive() const {
  std::call_once(primitive_once_, [this] {
    const TowerPtr<K> self = this->shared_from_this();
    PrimitiveElement<K> pe;
    auto accept = [&](const TowerElem<K>& g) -> bool {
      Matrix<K> powers = powers_matrix(g, degree_ + 1);
      auto m = first_dependency(powers);
      if (!m || static_cast<std::size_t>(m->deg()) != degree_) return false;
      pe.element = g;
      pe.min_poly = *m;
      pe.from_power_basis = Matrix<K>(degree_, degree_, zero_);
      for (std::size_t i = 0; i < degree_; ++i) {
        for (std::size_t j = 0; j < degree_; ++j) pe.from_power_basis(i, j) = powers(i, j);
      }
      pe.to_power_basis = inverse_matrix(pe.from_power_basis);
      return true;
    };
    if (depth_ <= 1) {
      pe.element = depth_ == 0 ? one() : generator(1);
      std::vector<K> m;
      if (depth_ == 0) {
        m = {negate(scalar_like(zero_, 1)), scalar_like(zero_, 1)};
      } else {
        for (const auto& c : min_poly_.coefficients()) m.push_back(c.base_value());
      }
      pe.min_poly = Poly<K>(std::move(m));
      pe.simple = self;
      pe.from_power_basis = Matrix<K>::identity(degree_, zero_);
      pe.to_power_basis = pe.from_power_basis;
      primitive_ = std::move(pe);
      return;
    }
    const auto gens = generators();
    const std::size_t k = gens.size();
    const std::uint64_t p = characteristic();
    const long max_norm = p == 0 ? 12 : static_cast<long>(p / 2);
    bool found = false;
    for (long n = 0; n <= max_norm && !found; ++n) {
      std::vector<std::vector<long>> cs;
      shell(k - 1, n, cs);
      for (const auto& c : cs) {
        TowerElem<K> g = gens[0];
        for (std::size_t i = 1; i < k; ++i) {
          if (c[i - 1] != 0) g += gens[i] * scalar_like(zero_, c[i - 1]);
        }
        if (accept(g)) {
          found = true;
          break;
        }
      }
    }
    if (!found && p != 0) {
      // Finite towers: every element in flat order, within a fixed budget.
      const std::uint64_t budget = 1ULL << 20;
      for (std::uint64_t idx = 1; idx < budget && !found; ++idx) {
        std::vector<K> c;
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < degree_; ++i) {
          c.push_back(scalar_like(zero_, static_cast<long>(x % p)));
          x /= p;
        }
        if (x != 0) break;
        found = accept(element(std::move(c)));
      }
    }
    if (!found) fail(ErrorKind::SearchExhausted, "no primitive element within the search budget");
    pe.simple = simple(base_tower(), pe.min_poly, "g");
    primitive_ = std::move(pe);
  });
  return *primitive_;
}

// --- text ---------------------------------------------------------------------

template <class K>
std::string Tower<K>::render(const TowerElem<K>& x) const {
  if (x.is_zero()) return "0";
  const auto labs = labels();
  std::vector<std::size_t> dims;
  {
    std::vector<std::size_t> rev;
    const Tower* t = this;
    while (t->depth_ > 0) {
      rev.push_back(t->level_degree_);
      t = t->parent_.get();
    }
    dims.assign(rev.rbegin(), rev.rend());
  }
  std::string out;
  bool first = true;
  for (std::size_t i = x.coords().size(); i-- > 0;) {
    const K& c = x.coords()[i];
    if (is_zero(c)) continue;
    std::string mono;
    std::size_t rest = i;
    for (std::size_t level = 0; level < dims.size(); ++level) {
      const std::size_t e = rest % dims[level];
      rest /= dims[level];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += labs[level];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const bool neg = is_negative(c);
    const K mag = neg ? negate(c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += to_string(mag);
    } else if (is_one(mag)) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

template <class K>
std::vector<std::pair<std::string, std::string>> Tower<K>::describe() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int level = 1; level <= depth_; ++level) {
    TowerPtr<K> t = ancestor(level);
    out.emplace_back(t->label(), galois::render(t->min_poly(), "t"));
  }
  return out;
}

template <class K>
std::string Tower<K>::base_name() const {
  const std::uint64_t p = characteristic();
  return p == 0 ? "Q" : "F" + std::to_string(p);
}

#define GALOIS_INSTANTIATE_TOWER(K)                                                                              \
  template class TowerElem<K>;                                                                                   \
  template class Tower<K>;                                                                                       \
  template TowerElem<K> operator*(const TowerElem<K>&, const TowerElem<K>&);                                     \
  template bool operator==(const TowerElem<K>&, const TowerElem<K>&);                                            \
  template TowerElem<K> inverse(const TowerElem<K>&);                                                            \
  template TowerElem<K> pow(const TowerElem<K>&, const Integer&);                                                \
  template Poly<K> min_poly(const TowerElem<K>&);                                                                \
  template std::size_t relative_degree(const TowerElem<K>&, const Tower<K>&);                                    \
  template bool lies_in(const TowerElem<K>&, const Tower<K>&);                                                   \
  template TowerElem<K> substitute(const Tower<K>&, const std::vector<K>&, const std::vector<TowerElem<K>>&,      \
                                   const TowerPtr<K>&);                                                          \
  template Poly<TowerElem<K>> substitute_poly(const Poly<TowerElem<K>>&, const std::vector<TowerElem<K>>&,       \
                                              const TowerPtr<K>&);

GALOIS_INSTANTIATE_TOWER(Rational)
GALOIS_INSTANTIATE_TOWER(FpScalar)

}  // namespace galois
