#pragma once

// Block-matrix solvability criteria, decided without solving the equation.
//
//   sylvester_hat: [[A, C], [0, B]] and [[A, 0], [0, B]] are hat-similar.
//     Decided as complex similarity of their twisted adjoints.
//   stein_hat: the pairs ([[A, C], [0, I]], [[I, 0], [0, B]]) and
//     ([[A, 0], [0, I]], [[I, 0], [0, B]]) are related by R and hat(S), S.
//     Decided as strict equivalence of the regular pencils
//     x * adjoint([[I,0],[0,B]]) + twisted_adjoint([[A,C],[0,I]]) and
//     x * adjoint([[I,0],[0,B]]) + twisted_adjoint([[A,0],[0,I]]).
//   two_sided: [[A, C], [0, B]] and [[A, 0], [0, B]] have equal rank.

#include "qroth/equation.hpp"
#include "qroth/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qroth {

struct ComparedInvariant {
  std::string label;
  std::optional<SmithForm> smith;
  std::optional<std::size_t> rank;
};

enum class CriterionStatus { decided, non_regular_pencil };

struct CriterionReport {
  bool verdict = false;
  std::string method;
  CriterionStatus status = CriterionStatus::decided;
  std::vector<ComparedInvariant> invariants;
};

/// Throws std::invalid_argument unless inst.kind is sylvester_hat.
CriterionReport check_roth_hat(const EquationInstance& inst);
/// Throws std::invalid_argument unless inst.kind is stein_hat.
CriterionReport check_wimmer_hat(const EquationInstance& inst);
/// Throws std::invalid_argument unless inst.kind is two_sided.
CriterionReport check_rank_equivalence(const EquationInstance& inst);

/// Dispatches on inst.kind.
CriterionReport check_criterion(const EquationInstance& inst);

}  // namespace qroth
