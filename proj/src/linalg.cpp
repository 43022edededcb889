#include "galois/linalg.hpp"

namespace galois {

RowEchelon<Rational> rref(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row; row scaling keeps the row space.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * exact_div(l, m(i, j).get_den());
  }

  // Bareiss: every entry below the current pivot stays an exact minor.
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = exact_div(v, prev);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Back substitution over Q on the echelon rows.
  Matrix<Rational> out(rows, cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Integer& lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(a[i][j]) != 0) out(i, j) = make_rational(a[i][j], lead);
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = out(k, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t j = pc; j < cols; ++j) {
        if (sgn(out(i, j)) != 0) out(k, j) -= f * out(i, j);
      }
    }
  }
  return {std::move(out), std::move(pivots)};
}

}  // namespace galois
