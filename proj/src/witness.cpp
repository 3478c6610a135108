#include "qroth/witness.hpp"

#include <stdexcept>

namespace qroth {

namespace {

QMatrix unitriangular(const QMatrix& corner) {
  return block_2x2(QMatrix::identity(corner.rows()), corner, QMatrix::identity(corner.cols()));
}

QMatrix invert_or_throw(const QMatrix& m, const char* name) {
  if (!m.is_square()) throw DimensionError(std::string(name) + " must be square, got " + m.shape());
  auto inv = quaternion_inverse(m);
  if (!inv) throw SingularMatrixError(std::string(name) + " is singular");
  return *inv;
}

void require_shape(const QMatrix& m, std::size_t size, const char* name) {
  if (m.rows() != size || m.cols() != size)
    throw DimensionError(std::string("witness ") + name + " must be " + std::to_string(size) +
                         "x" + std::to_string(size) + ", got " + m.shape());
}

}  // namespace

Witness build_witness(const EquationInstance& inst, const QMatrix& x,
                      const std::optional<QMatrix>& y) {
  if (!residual(inst, x, y).is_zero())
    throw std::invalid_argument("witness requested for a matrix that does not solve the equation");
  switch (inst.kind) {
    case EquationKind::sylvester_hat:
      return {inst.kind, unitriangular(-x), QMatrix()};
    case EquationKind::stein_hat: {
      const QMatrix xh = hat_matrix(x, inst.aut);
      return {inst.kind, unitriangular(xh), unitriangular(xh * inst.b)};
    }
    case EquationKind::two_sided:
      return {inst.kind, unitriangular(-*y), unitriangular(x)};
  }
  throw std::logic_error("unhandled equation kind");
}

bool verify_witness(const EquationInstance& inst, const Witness& w) {
  if (w.kind != inst.kind) throw std::invalid_argument("witness kind does not match instance");
  const std::size_t m = inst.m();
  const std::size_t n = inst.n();
  const std::size_t size = m + n;
  require_shape(w.s, size, "S");
  if (inst.kind != EquationKind::sylvester_hat) require_shape(w.r, size, "R");

  const auto s_inv = quaternion_inverse(w.s);
  if (!s_inv) return false;
  if (inst.kind != EquationKind::sylvester_hat && !is_nonsingular(w.r)) return false;

  switch (inst.kind) {
    case EquationKind::sylvester_hat: {
      const QMatrix lhs = hat_matrix(*s_inv, inst.aut) * block_2x2(inst.a, inst.c, inst.b) * w.s;
      return lhs == block_diag(inst.a, inst.b);
    }
    case EquationKind::stein_hat: {
      const QMatrix id_m = fill_block(BlockFill::identity, m);
      const QMatrix id_n = fill_block(BlockFill::identity, n);
      const QMatrix left = block_diag(id_m, inst.b);
      const bool first = block_2x2(inst.a, inst.c, id_n) * w.r ==
                         hat_matrix(w.s, inst.aut) * block_diag(inst.a, id_n);
      return first && left * w.r == w.s * left;
    }
    case EquationKind::two_sided: {
      const QMatrix full = block_2x2(inst.a, inst.c, inst.b);
      const QMatrix diag = block_diag(inst.a, inst.b);
      return w.s * diag * w.r == full && quaternion_rank(full) == quaternion_rank(diag);
    }
  }
  throw std::logic_error("unhandled equation kind");
}

EquationInstance change_of_variables(const EquationInstance& inst, const QMatrix& p,
                                     const QMatrix& q) {
  if (p.rows() != inst.m() || q.rows() != inst.n())
    throw DimensionError("P must be " + std::to_string(inst.m()) + "x" + std::to_string(inst.m()) +
                         " and Q " + std::to_string(inst.n()) + "x" + std::to_string(inst.n()));
  const QMatrix p_inv = invert_or_throw(p, "P");
  const QMatrix q_inv = invert_or_throw(q, "Q");
  const Automorphism aut = inst.aut;
  switch (inst.kind) {
    case EquationKind::sylvester_hat: {
      const QMatrix ph_inv = hat_matrix(p_inv, aut);
      return {inst.kind, ph_inv * inst.a * p, hat_matrix(q, aut) * inst.b * q_inv,
              ph_inv * inst.c * q_inv, aut};
    }
    case EquationKind::stein_hat:
      return {inst.kind, p_inv * inst.a * hat_matrix(p, aut), hat_matrix(q, aut) * inst.b * q_inv,
              p_inv * inst.c * q_inv, aut};
    case EquationKind::two_sided: break;
  }
  throw std::invalid_argument("change_of_variables applies to sylvester_hat and stein_hat");
}

QMatrix pull_back_solution(const QMatrix& y, const QMatrix& p, const QMatrix& q) {
  return p * y * q;
}

Witness pull_back_witness(const Witness& w, const QMatrix& p, const QMatrix& q, Automorphism aut) {
  const QMatrix p_inv = invert_or_throw(p, "P");
  const QMatrix q_inv = invert_or_throw(q, "Q");
  switch (w.kind) {
    case EquationKind::sylvester_hat:
      return {w.kind, block_diag(p, q_inv) * w.s * block_diag(p_inv, q), QMatrix()};
    case EquationKind::stein_hat: {
      const QMatrix ph = hat_matrix(p, aut);
      const QMatrix ph_inv = hat_matrix(p_inv, aut);
      const QMatrix qh = hat_matrix(q, aut);
      const QMatrix qh_inv = hat_matrix(q_inv, aut);
      return {w.kind, block_diag(ph, qh_inv) * w.s * block_diag(ph_inv, qh),
              block_diag(ph, q_inv) * w.r * block_diag(ph_inv, q)};
    }
    case EquationKind::two_sided: break;
  }
  throw std::invalid_argument("pull_back_witness applies to sylvester_hat and stein_hat");
}

}  // namespace qroth
