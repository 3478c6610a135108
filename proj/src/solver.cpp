#include "qroth/solver.hpp"

#include "qroth/linalg.hpp"
#include "qroth/smith.hpp"

#include <stdexcept>

namespace qroth {

SolveOutcome solve_equation(const EquationInstance& inst) {
  const auto sys = build_operator_matrix(inst);
  const auto sol = solve_linear_system(sys.op, sys.rhs);

  SolveOutcome out;
  if (!sol.consistent) {
    out.status = SolveStatus::unsolvable;
    out.certificate = sol.certificate;
    out.solution_space_dim = sys.op.cols() - rank(sys.op);
    return out;
  }
  out.status = SolveStatus::solvable;
  out.solution_space_dim = sol.nullspace.size();
  out.solution = from_real_coordinates(sol.particular, inst.m(), inst.n());
  if (inst.kind == EquationKind::two_sided)
    out.solution_y = from_real_coordinates(sol.particular, inst.m(), inst.n(), 4 * inst.m() * inst.n());
  return out;
}

namespace {

void require_complex_coefficients(const EquationInstance& inst) {
  if (inst.kind == EquationKind::two_sided)
    throw std::invalid_argument("solve_structured handles sylvester_hat and stein_hat only");
  if (!is_complex_matrix(inst.a) || !is_complex_matrix(inst.b))
    throw std::invalid_argument("solve_structured needs A and B with complex entries only");
}

std::vector<Gaussian> as_vector(const CMatrix& m) { return m.data(); }

}  // namespace

SolveOutcome solve_structured(const EquationInstance& inst) {
  require_complex_coefficients(inst);
  const std::size_t m = inst.m();
  const std::size_t n = inst.n();
  const CMatrix a = split_complex_parts(inst.a).first;
  const CMatrix b = split_complex_parts(inst.b).first;
  const CMatrix b_bar = conj(b);
  const Gaussian eps(inst.aut.epsilon());
  const auto [c1, c2] = split_complex_parts(inst.c);

  CMatrix op1;
  CMatrix op2;
  if (inst.kind == EquationKind::sylvester_hat) {
    op1 = vectorize_complex(m, n, [&](const CMatrix& z) { return a * z - z * b; });
    op2 = vectorize_complex(m, n, [&](const CMatrix& z) { return a * z - (z * b_bar) * eps; });
  } else {
    op1 = vectorize_complex(m, n, [&](const CMatrix& z) { return z - a * z * b; });
    op2 = vectorize_complex(m, n, [&](const CMatrix& z) { return z - (a * z * b_bar) * eps; });
  }

  const auto s1 = solve_linear_system(op1, as_vector(c1));
  const auto s2 = solve_linear_system(op2, as_vector(c2));

  SolveOutcome out;
  out.solution_space_dim = 2 * ((m * n - rank(op1)) + (m * n - rank(op2)));
  if (!s1.consistent || !s2.consistent) {
    out.status = SolveStatus::unsolvable;
    out.complex_certificate = !s1.consistent ? s1.certificate : s2.certificate;
    return out;
  }
  out.status = SolveStatus::solvable;
  out.solution = join_complex_parts(CMatrix(m, n, s1.particular), CMatrix(m, n, s2.particular));
  return out;
}

bool uniqueness_test(const EquationInstance& inst) {
  if (inst.kind == EquationKind::two_sided)
    throw std::invalid_argument("uniqueness_test applies to one-unknown equations");
  const auto sys = build_operator_matrix(inst);
  return rank(sys.op) == sys.op.cols();
}

bool common_spectrum_test(const CMatrix& a, const CMatrix& b, EquationKind kind) {
  const Poly pa = characteristic_polynomial(a);
  const Poly pb = characteristic_polynomial(b);
  switch (kind) {
    case EquationKind::sylvester_hat: return gcd(pa, pb).is_one();
    case EquationKind::stein_hat: return gcd(pa, pb.reciprocal()).is_one();
    case EquationKind::two_sided: break;
  }
  throw std::invalid_argument("common_spectrum_test applies to sylvester_hat and stein_hat");
}

}  // namespace qroth
