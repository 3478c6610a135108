#pragma once

// Smith normal form over Q(i)[x] and the exact similarity / strict pencil
// equivalence decisions built on it.

#include "qroth/poly.hpp"
#include "qroth/qmatrix.hpp"

#include <vector>

namespace qroth {

using PolyMatrix = Matrix<Poly>;

struct SmithForm {
  /// Monic, f1 | f2 | ... | f_rank. Unit factors (1) are kept.
  std::vector<Poly> invariant_factors;
  std::size_t rank = 0;

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

/// Diagonalises by unimodular row/column operations. Pivot: first entry of
/// minimal degree in row-major order over the trailing submatrix.
SmithForm smith_normal_form(PolyMatrix m);

/// x*I - A.
PolyMatrix characteristic_matrix(const CMatrix& a);

/// det(x*I - A), by the Faddeev-LeVerrier recurrence.
Poly characteristic_polynomial(const CMatrix& a);

/// Similarity over C via equal invariant factors of x*I - A and x*I - B.
/// Throws DimensionError for non-square or differently sized inputs.
bool similar_over_C(const CMatrix& a, const CMatrix& b);

/// The pencil x*L + M.
struct Pencil {
  CMatrix lead;
  CMatrix constant;

  Pencil(CMatrix l, CMatrix m);
  [[nodiscard]] std::size_t size() const { return lead.rows(); }
  /// x*L + M
  [[nodiscard]] PolyMatrix matrix() const;
  /// L + y*M, whose finite elementary divisors at 0 are the infinite ones of x*L + M.
  [[nodiscard]] PolyMatrix reversed() const;
};

bool is_regular(const Pencil& p);

enum class PencilVerdict { equivalent, inequivalent, non_regular };

/// Strict equivalence of regular pencils: equal Smith forms of x*L + M and
/// of L + y*M. Non-regular input yields PencilVerdict::non_regular.
PencilVerdict strictly_equivalent_pencils(const Pencil& p, const Pencil& q);

}  // namespace qroth
