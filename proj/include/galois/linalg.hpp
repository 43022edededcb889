#pragma once

// Exact dense linear algebra over a field: reduced row echelon form, kernels
// and canonical subspaces. Rational matrices are reduced fraction-free.

#include <cstddef>
#include <span>
#include <vector>

#include "galois/scalar.hpp"

namespace galois {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const K& zero)
      : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const K& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_like(zero, 1);
    return m;
  }

  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(const std::vector<std::vector<K>>& columns, std::size_t rows, const K& zero) {
    Matrix m(rows, columns.size(), zero);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& zero() const { return zero_; }
  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<const K> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  std::vector<K> column(std::size_t j) const {
    std::vector<K> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  std::vector<K> apply(std::span<const K> v) const {
    std::vector<K> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_zero(v[j]) && !is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  K zero_{};
  std::vector<K> a_;
};

template <class K>
struct RowEchelon {
  Matrix<K> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Fraction-free (Bareiss) elimination over Z after clearing denominators,
/// then exact back substitution.
RowEchelon<Rational> rref(const Matrix<Rational>& m);

/// Gauss-Jordan elimination over an arbitrary field.
template <class K>
RowEchelon<K> rref(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    const K inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
template <class K>
std::vector<std::vector<K>> nullspace(const Matrix<K>& m) {
  auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(m.cols(), m.zero());
    v[f] = scalar_like(m.zero(), 1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = negate(ech.reduced(i, f));
    out.push_back(std::move(v));
  }
  return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

/// Inverse of a square matrix; InternalInvariant when singular.
template <class K>
Matrix<K> inverse_matrix(const Matrix<K>& m) {
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n, m.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = scalar_like(m.zero(), 1);
  }
  auto ech = rref(aug);
  check_invariant(ech.pivots.size() == n && (n == 0 || ech.pivots.back() == n - 1), "inverse_matrix: singular matrix");
  Matrix<K> inv(n, n, m.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  }
  return inv;
}

/// Linear subspace of K^n kept in reduced row echelon form, so two subspaces
/// are equal exactly when their bases are equal.
template <class K>
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<K>>& vectors, const K& zero) {
    Subspace s;
    s.n_ = ambient_dim;
    s.zero_ = zero;
    if (vectors.empty()) return s;
    Matrix<K> m(vectors.size(), ambient_dim, zero);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    auto ech = rref(m);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      auto row = ech.reduced.row(i);
      s.basis_.emplace_back(row.begin(), row.end());
    }
    s.pivots_ = std::move(ech.pivots);
    return s;
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<K>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const K& zero() const { return zero_; }

  /// Remainder of v after elimination against the basis.
  std::vector<K> reduce(std::span<const K> v) const {
    std::vector<K> r(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const K c = r[pivots_[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!is_zero(basis_[i][j])) r[j] -= c * basis_[i][j];
      }
    }
    return r;
  }

  bool contains(std::span<const K> v) const {
    for (const auto& x : reduce(v)) {
      if (!is_zero(x)) return false;
    }
    return true;
  }

  bool is_subspace_of(const Subspace& other) const {
    for (const auto& b : basis_) {
      if (!other.contains(b)) return false;
    }
    return true;
  }

  /// Coordinates of a member v with respect to the echelon basis.
  std::vector<K> coordinates(std::span<const K> v) const {
    std::vector<K> c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  std::size_t n_ = 0;
  K zero_{};
  std::vector<std::vector<K>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace galois
