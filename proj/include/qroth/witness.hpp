#pragma once

// Witness matrices for the block-matrix solvability conditions, and the
// change of variables X = P Y Q that moves an instance to an equivalent one.
//
//   sylvester_hat:  hat(S)^-1 [[A, C], [0, B]] S = [[A, 0], [0, B]]
//   stein_hat:      [[A, C], [0, I]] R = hat(S) [[A, 0], [0, I]]
//                   [[I, 0], [0, B]] R = S      [[I, 0], [0, B]]
//   two_sided:      S [[A, 0], [0, B]] R = [[A, C], [0, B]]

#include "qroth/equation.hpp"

#include <optional>

namespace qroth {

struct Witness {
  EquationKind kind = EquationKind::sylvester_hat;
  /// S for every kind (the left factor for two_sided).
  QMatrix s;
  /// R for stein_hat and two_sided (right factor); empty for sylvester_hat.
  QMatrix r;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// The unitriangular witnesses of a known solution:
///   sylvester_hat: S = [[I, -X], [0, I]]
///   stein_hat:     R = [[I, hat(X) B], [0, I]], S = [[I, hat(X)], [0, I]]
///   two_sided:     S = [[I, -Y], [0, I]], R = [[I, X], [0, I]]
/// Throws std::invalid_argument when the residual of X (and Y) is nonzero.
Witness build_witness(const EquationInstance& inst, const QMatrix& x,
                      const std::optional<QMatrix>& y = std::nullopt);

/// Exact check of the witness equations, including nonsingularity of every
/// witness matrix. Throws DimensionError when shapes do not fit the instance.
bool verify_witness(const EquationInstance& inst, const Witness& w);

/// Thrown when P or Q is not invertible.
class SingularMatrixError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Substitutes X = P Y Q:
///   sylvester_hat -> (hat(P)^-1 A P,  hat(Q) B Q^-1,  hat(P)^-1 C Q^-1)
///   stein_hat     -> (P^-1 A hat(P),  hat(Q) B Q^-1,  P^-1 C Q^-1)
/// Y solves the result iff P Y Q solves the original.
EquationInstance change_of_variables(const EquationInstance& inst, const QMatrix& p,
                                     const QMatrix& q);

/// X = P Y Q.
QMatrix pull_back_solution(const QMatrix& y, const QMatrix& p, const QMatrix& q);

/// Maps a witness of change_of_variables(inst, P, Q) to one of inst:
///   sylvester_hat: S = diag(P, Q^-1) S' diag(P^-1, Q)
///   stein_hat:     R = diag(hat(P), Q^-1) R' diag(hat(P)^-1, Q)
///                  S = diag(hat(P), hat(Q)^-1) S' diag(hat(P)^-1, hat(Q))
Witness pull_back_witness(const Witness& w, const QMatrix& p, const QMatrix& q, Automorphism aut);

}  // namespace qroth
