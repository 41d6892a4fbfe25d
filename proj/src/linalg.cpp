#include "liekit/linalg.hpp"

#include <utility>

#include "liekit/errors.hpp"

namespace liekit {

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.rref;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(pivot_row, j));
    }
    const Rational inv = Rational(1) / a(pivot_row, col);
    for (std::size_t j = col; j < cols; ++j) a(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a(i, col).is_zero()) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= factor * a(pivot_row, j);
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(n, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivots[i]] = -r.rref(i, free_col);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

namespace {

// Clears denominators row by row; returns the integer matrix and the product
// of the row scaling factors.
std::pair<std::vector<std::vector<Integer>>, Integer> to_integer_rows(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(m.cols()));
  Integer total_scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer g;
      mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
      l = g;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    total_scale *= l;
  }
  return {std::move(rows), total_scale};
}

}  // namespace

Rational det(const Matrix& m) {
  if (!m.is_square()) throw NonSquareError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  auto [a, scale] = to_integer_rows(m);

  // Bareiss fraction-free elimination; each division is exact.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return Rational(0);
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return Rational(d, scale);
}

Polynomial charpoly(const Matrix& m) {
  if (!m.is_square()) throw NonSquareError("charpoly: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  if (n == 0) return Polynomial(c);

  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A(M_k + c_{n-k} I).
  Matrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    c[n - k] = -mk.trace() / Rational(static_cast<long>(k));
    if (k == n) break;
    Matrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k];
    mk = m * shifted;
  }
  return Polynomial(c);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw NonSquareError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] >= n) throw Error("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
  return inv;
}

}  // namespace liekit
