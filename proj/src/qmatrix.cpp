#include "qroth/qmatrix.hpp"

namespace qroth {

ComplexParts split_complex_parts(const QMatrix& m) {
  return {m.map([](const Quaternion& q) { return q.u(); }),
          m.map([](const Quaternion& q) { return q.v(); })};
}

QMatrix join_complex_parts(const CMatrix& first, const CMatrix& second) {
  if (first.rows() != second.rows() || first.cols() != second.cols())
    throw DimensionError("complex parts have shapes " + first.shape() + " and " + second.shape());
  QMatrix out(first.rows(), first.cols());
  for (std::size_t r = 0; r < first.rows(); ++r)
    for (std::size_t c = 0; c < first.cols(); ++c)
      out(r, c) = Quaternion::from_split(first(r, c), second(r, c));
  return out;
}

QMatrix hat_matrix(const QMatrix& m, Automorphism aut) {
  return m.map([aut](const Quaternion& q) { return aut.apply(q); });
}

CMatrix conj(const CMatrix& m) {
  return m.map([](const Gaussian& z) { return z.conj(); });
}

CMatrix to_complex_matrix(const RMatrix& m) {
  return m.map([](const Rational& r) { return Gaussian(r); });
}

QMatrix to_quaternion_matrix(const CMatrix& m) {
  return m.map([](const Gaussian& z) { return Quaternion(z); });
}

bool is_complex_matrix(const QMatrix& m) {
  for (const auto& q : m.data())
    if (!q.is_complex()) return false;
  return true;
}

CMatrix complex_adjoint(const QMatrix& m) {
  auto [m1, m2] = split_complex_parts(m);
  return block_matrix(m1, m2, -conj(m2), conj(m1));
}

QMatrix from_complex_adjoint(const CMatrix& adj) {
  if (adj.rows() % 2 != 0 || adj.cols() % 2 != 0)
    throw DimensionError("complex adjoint must have even shape, got " + adj.shape());
  const std::size_t m = adj.rows() / 2;
  const std::size_t n = adj.cols() / 2;
  return join_complex_parts(adj.block(0, 0, m, n), adj.block(0, n, m, n));
}

CMatrix JTwist::matrix() const {
  CMatrix j = CMatrix::identity(2 * size);
  for (std::size_t i = size; i < 2 * size; ++i) j(i, i) = Gaussian(epsilon);
  return j;
}

CMatrix twisted_adjoint(const QMatrix& m, Automorphism aut) {
  CMatrix adj = complex_adjoint(m);
  if (aut.epsilon() == 1) return adj;
  for (std::size_t r = m.rows(); r < adj.rows(); ++r)
    for (std::size_t c = 0; c < adj.cols(); ++c) adj(r, c) = -adj(r, c);
  return adj;
}

RMatrix real_rep(const QMatrix& a) {
  if (!a.is_square()) throw DimensionError("real_rep needs a square matrix, got " + a.shape());
  const std::size_t n = a.rows();
  const RMatrix a1 = a.map([](const Quaternion& q) { return q.a; });
  const RMatrix a2 = a.map([](const Quaternion& q) { return q.b; });
  const RMatrix a3 = a.map([](const Quaternion& q) { return q.c; });
  const RMatrix a4 = a.map([](const Quaternion& q) { return q.d; });
  const RMatrix* blocks[4][4] = {{&a1, &a2, &a3, &a4},
                                 {&a2, &a1, &a4, &a3},
                                 {&a3, &a4, &a1, &a2},
                                 {&a4, &a3, &a2, &a1}};
  const int signs[4][4] = {{1, 1, -1, 1}, {1, -1, -1, -1}, {1, -1, 1, 1}, {1, 1, 1, -1}};
  RMatrix out(4 * n, 4 * n);
  for (int br = 0; br < 4; ++br)
    for (int bc = 0; bc < 4; ++bc)
      out.set_block(br * n, bc * n, signs[br][bc] > 0 ? *blocks[br][bc] : -*blocks[br][bc]);
  return out;
}

QMatrix from_real_rep(const RMatrix& r) {
  if (!r.is_square() || r.rows() % 4 != 0)
    throw DimensionError("real representation must be 4n x 4n, got " + r.shape());
  const std::size_t n = r.rows() / 4;
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c)
      out(i, c) = Quaternion(r(i, c), r(n + i, c), r(2 * n + i, c), r(3 * n + i, c));
  return out;
}

std::size_t quaternion_rank(const QMatrix& m) { return rank(complex_adjoint(m)) / 2; }

bool is_nonsingular(const QMatrix& m) {
  return m.is_square() && quaternion_rank(m) == m.rows();
}

std::optional<QMatrix> quaternion_inverse(const QMatrix& m) {
  auto inv = inverse(complex_adjoint(m));
  if (!inv) return std::nullopt;
  return from_complex_adjoint(*inv);
}

QMatrix block_2x2(const QMatrix& a, const QMatrix& c, const QMatrix& b) {
  if (!a.is_square() || !b.is_square() || c.rows() != a.rows() || c.cols() != b.rows())
    throw DimensionError("block_2x2 expects A m x m, C m x n, B n x n; got A " + a.shape() +
                         ", C " + c.shape() + ", B " + b.shape());
  return block_matrix(a, c, QMatrix(b.rows(), a.cols()), b);
}

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
  return block_2x2(a, QMatrix(a.rows(), b.rows()), b);
}

QMatrix fill_block(BlockFill fill, std::size_t n) {
  return fill == BlockFill::identity ? QMatrix::identity(n) : QMatrix(n, n);
}

Blocks extract_blocks(const QMatrix& full, std::size_t m, std::size_t n) {
  if (full.rows() != m + n || full.cols() != m + n)
    throw DimensionError("cannot split " + full.shape() + " into " + std::to_string(m) + "+" +
                         std::to_string(n) + " blocks");
  return {full.block(0, 0, m, m), full.block(0, m, m, n), full.block(m, 0, n, m),
          full.block(m, m, n, n)};
}

}  // namespace qroth
