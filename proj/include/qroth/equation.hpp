#pragma once

// The quaternion matrix equations handled by the library:
//   sylvester_hat:  A X - hat(X) B = C
//   stein_hat:      X - A hat(X) B = C
//   two_sided:      A X - Y B = C     (two unknowns, no automorphism)
// with A m x m, B n x n, C m x n.

#include "qroth/qmatrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qroth {

enum class EquationKind { sylvester_hat, stein_hat, two_sided };

std::string_view to_string(EquationKind kind);
/// Throws std::invalid_argument for unknown names.
EquationKind parse_kind(std::string_view name);

struct EquationInstance {
  EquationKind kind = EquationKind::sylvester_hat;
  QMatrix a;
  QMatrix b;
  QMatrix c;
  Automorphism aut = Automorphism::identity();

  EquationInstance(EquationKind k, QMatrix a_, QMatrix b_, QMatrix c_, Automorphism aut_);

  [[nodiscard]] std::size_t m() const { return a.rows(); }
  [[nodiscard]] std::size_t n() const { return b.rows(); }
  /// Number of quaternion unknown matrices (1, or 2 for two_sided).
  [[nodiscard]] std::size_t unknowns() const { return kind == EquationKind::two_sided ? 2 : 1; }

  friend bool operator==(const EquationInstance&, const EquationInstance&) = default;
};

/// Throws DimensionError unless A is m x m, B is n x n and C is m x n.
void validate_dimensions(const QMatrix& a, const QMatrix& b, const QMatrix& c);

/// Left-hand side of the equation at X (and Y for two_sided).
QMatrix apply_lhs(const EquationInstance& inst, const QMatrix& x,
                  const std::optional<QMatrix>& y = std::nullopt);
QMatrix residual(const EquationInstance& inst, const QMatrix& x,
                 const std::optional<QMatrix>& y = std::nullopt);

/// Real coordinates: entry (s, t) component q of an m x n matrix maps to
/// index 4*(s*n + t) + q with components ordered (1, i, j, k).
std::vector<Rational> real_coordinates(const QMatrix& m);
QMatrix from_real_coordinates(const std::vector<Rational>& coords, std::size_t rows,
                              std::size_t cols, std::size_t offset = 0);

struct OperatorSystem {
  /// 4mn x 4mn (or 4mn x 8mn for two_sided, X coordinates first).
  RMatrix op;
  std::vector<Rational> rhs;
};

/// The equation's left side as an exact real-linear map on the unknowns'
/// real coordinates, with the coordinates of C as right-hand side.
OperatorSystem build_operator_matrix(const EquationInstance& inst);

}  // namespace qroth
