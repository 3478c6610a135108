#pragma once

#include "qroth/linalg.hpp"
#include "qroth/matrix.hpp"
#include "qroth/quaternion.hpp"

#include <optional>
#include <utility>

namespace qroth {

using QMatrix = Matrix<Quaternion>;
using CMatrix = Matrix<Gaussian>;
using RMatrix = Matrix<Rational>;

/// M = M1 + M2*j entrywise, M1 and M2 complex.
struct ComplexParts {
  CMatrix first;
  CMatrix second;
};

ComplexParts split_complex_parts(const QMatrix& m);
QMatrix join_complex_parts(const CMatrix& first, const CMatrix& second);

/// Entrywise automorphism.
QMatrix hat_matrix(const QMatrix& m, Automorphism aut);

CMatrix conj(const CMatrix& m);
CMatrix to_complex_matrix(const RMatrix& m);
QMatrix to_quaternion_matrix(const CMatrix& m);
/// True when every entry lies in the complex subfield.
bool is_complex_matrix(const QMatrix& m);

/// 2m x 2n matrix [[M1, M2], [-conj(M2), conj(M1)]].
CMatrix complex_adjoint(const QMatrix& m);

/// Inverse of complex_adjoint on its image; reads the first block row.
QMatrix from_complex_adjoint(const CMatrix& adj);

/// J = diag(I_size, eps * I_size), J^2 = I.
struct JTwist {
  int epsilon;
  std::size_t size;

  [[nodiscard]] CMatrix matrix() const;
};

/// J * complex_adjoint(M) with J = diag(I, eps*I) sized by the rows of M:
/// [[M1, M2], [-eps*conj(M2), eps*conj(M1)]].
CMatrix twisted_adjoint(const QMatrix& m, Automorphism aut);

/// The 4n x 4n real matrix built from A = A1 + A2 i + A3 j + A4 k as
///   [[A1,  A2, -A3,  A4],
///    [A2, -A1, -A4, -A3],
///    [A3, -A4,  A1,  A2],
///    [A4,  A3,  A2, -A1]].
RMatrix real_rep(const QMatrix& a);
/// Reads A back from the first block column of real_rep(A).
QMatrix from_real_rep(const RMatrix& r);

/// Rank over the quaternions, computed as rank(complex_adjoint(M)) / 2.
std::size_t quaternion_rank(const QMatrix& m);

bool is_nonsingular(const QMatrix& m);
/// Exact inverse through the complex adjoint, nullopt when singular.
std::optional<QMatrix> quaternion_inverse(const QMatrix& m);

enum class BlockFill { zero, identity };

/// [[A, C], [0, B]] for A m x m, C m x n, B n x n.
QMatrix block_2x2(const QMatrix& a, const QMatrix& c, const QMatrix& b);
/// [[A, 0], [0, B]].
QMatrix block_diag(const QMatrix& a, const QMatrix& b);
/// Square fill block of size n (zero or identity).
QMatrix fill_block(BlockFill fill, std::size_t n);

struct Blocks {
  QMatrix top_left, top_right, bottom_left, bottom_right;
};
/// Splits an (m+n) x (m+n) matrix into its four blocks.
Blocks extract_blocks(const QMatrix& full, std::size_t m, std::size_t n);

}  // namespace qroth
