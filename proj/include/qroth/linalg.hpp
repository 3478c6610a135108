#pragma once

// Exact Gauss-Jordan elimination over a commutative field (Rational or
// Gaussian). Pivots are the first nonzero entry in each column; no
// magnitude-based pivoting is needed in exact arithmetic.

#include "qroth/matrix.hpp"

#include <optional>
#include <vector>

namespace qroth {

template <typename T>
struct LinearSolution {
  bool consistent = false;
  std::vector<T> particular;
  /// Basis of the null space of A.
  std::vector<std::vector<T>> nullspace;
  /// When inconsistent: y with y^T A = 0 and y^T b = 1.
  std::vector<T> certificate;
};

template <typename T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. If `track` is non-null it must be rows x rows;
/// it is overwritten with an invertible E such that E * input = reduced.
template <typename T>
RowEchelon<T> row_reduce(Matrix<T> m, Matrix<T>* track = nullptr) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (track) *track = Matrix<T>::identity(rows);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
      if (track)
        for (std::size_t k = 0; k < rows; ++k) std::swap((*track)(p, k), (*track)(r, k));
    }
    const T inv = m(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
    if (track)
      for (std::size_t k = 0; k < rows; ++k) (*track)(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t k = c; k < cols; ++k) m(i, k) -= f * m(r, k);
      if (track)
        for (std::size_t k = 0; k < rows; ++k) (*track)(i, k) -= f * (*track)(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).pivot_cols.size();
}

template <typename T>
LinearSolution<T> solve_linear_system(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows())
    throw DimensionError("right-hand side has " + std::to_string(b.size()) +
                         " entries, matrix has " + std::to_string(a.rows()) + " rows");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Matrix<T> aug(rows, cols + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < rows; ++i) aug(i, cols) = b[i];

  Matrix<T> track;
  auto [red, pivots] = row_reduce(std::move(aug), &track);

  LinearSolution<T> out;
  if (!pivots.empty() && pivots.back() == cols) {
    // Row pivots.size()-1 reads 0 = 1 after reduction.
    const std::size_t bad = pivots.size() - 1;
    out.certificate.resize(rows);
    for (std::size_t k = 0; k < rows; ++k) out.certificate[k] = track(bad, k);
    return out;
  }
  out.consistent = true;
  out.particular.assign(cols, T(0));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    out.particular[pivots[i]] = red(i, cols);
    is_pivot[pivots[i]] = true;
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

/// Exact inverse, or nullopt when singular. Throws DimensionError if not square.
template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square " + m.shape());
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<T>::identity(n));
  auto [red, pivots] = row_reduce(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return red.block(0, n, n, n);
}

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& x) {
  if (x.size() != a.cols()) throw DimensionError("mat_vec size mismatch");
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) y[r] += a(r, c) * x[c];
  return y;
}

}  // namespace qroth
