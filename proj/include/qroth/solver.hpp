#pragma once

#include "qroth/equation.hpp"

#include <optional>
#include <vector>

namespace qroth {

enum class SolveStatus { solvable, unsolvable };

struct SolveOutcome {
  SolveStatus status = SolveStatus::unsolvable;
  /// X when solvable.
  std::optional<QMatrix> solution;
  /// Y for two_sided instances.
  std::optional<QMatrix> solution_y;
  /// Real dimension of the homogeneous solution set.
  std::size_t solution_space_dim = 0;
  /// y with y^T op = 0 and y^T rhs = 1 for the real vectorized system.
  std::vector<Rational> certificate;
  /// Same for the complex systems of solve_structured (first failing system).
  std::vector<Gaussian> complex_certificate;

  [[nodiscard]] bool solvable() const { return status == SolveStatus::solvable; }
};

/// Exact solve of the vectorized real system. Works for every kind,
/// including empty shapes (m = 0 or n = 0).
SolveOutcome solve_equation(const EquationInstance& inst);

/// For A and B with complex entries only: splits C = C1 + C2 j and solves
///   sylvester_hat:  A Z1 - Z1 B = C1,   A Z2 - eps Z2 conj(B) = C2
///   stein_hat:      Z1 - A Z1 B = C1,   Z2 - eps A Z2 conj(B) = C2
/// over Q(i), returning X = Z1 + Z2 j. Throws std::invalid_argument if A or
/// B has a non-complex entry or the kind is two_sided.
SolveOutcome solve_structured(const EquationInstance& inst);

/// True iff the vectorized operator is nonsingular, i.e. every C gives a
/// unique solution. Throws for two_sided.
bool uniqueness_test(const EquationInstance& inst);

/// sylvester_hat: gcd(charpoly(A), charpoly(B)) == 1.
/// stein_hat: gcd(charpoly(A), reciprocal(charpoly(B))) == 1, i.e. no
/// eigenvalue pair with lambda * mu = 1.
bool common_spectrum_test(const CMatrix& a, const CMatrix& b, EquationKind kind);

/// Builds the complex operator of a linear map Z -> f(Z) on m x n complex
/// matrices, columns indexed by row-major entry position.
template <typename F>
CMatrix vectorize_complex(std::size_t m, std::size_t n, F&& f) {
  CMatrix op(m * n, m * n);
  for (std::size_t e = 0; e < m * n; ++e) {
    CMatrix basis(m, n);
    basis(e / n, e % n) = Gaussian(1);
    const CMatrix image = f(basis);
    for (std::size_t r = 0; r < m * n; ++r) op(r, e) = image.data()[r];
  }
  return op;
}

}  // namespace qroth
