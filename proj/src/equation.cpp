#include "qroth/equation.hpp"

#include <array>
#include <stdexcept>

namespace qroth {

std::string_view to_string(EquationKind kind) {
  switch (kind) {
    case EquationKind::sylvester_hat: return "sylvester_hat";
    case EquationKind::stein_hat: return "stein_hat";
    case EquationKind::two_sided: return "two_sided";
  }
  return "unknown";
}

EquationKind parse_kind(std::string_view name) {
  if (name == "sylvester_hat" || name == "sylvester-hat") return EquationKind::sylvester_hat;
  if (name == "stein_hat" || name == "stein-hat") return EquationKind::stein_hat;
  if (name == "two_sided" || name == "two-sided") return EquationKind::two_sided;
  throw std::invalid_argument("unknown equation kind '" + std::string(name) + "'");
}

void validate_dimensions(const QMatrix& a, const QMatrix& b, const QMatrix& c) {
  if (!a.is_square()) throw DimensionError("A must be square, got " + a.shape());
  if (!b.is_square()) throw DimensionError("B must be square, got " + b.shape());
  if (c.rows() != a.rows() || c.cols() != b.rows())
    throw DimensionError("C must be " + std::to_string(a.rows()) + "x" +
                         std::to_string(b.rows()) + ", got " + c.shape());
}

EquationInstance::EquationInstance(EquationKind k, QMatrix a_, QMatrix b_, QMatrix c_,
                                   Automorphism aut_)
    : kind(k), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), aut(aut_) {
  validate_dimensions(a, b, c);
}

QMatrix apply_lhs(const EquationInstance& inst, const QMatrix& x, const std::optional<QMatrix>& y) {
  switch (inst.kind) {
    case EquationKind::sylvester_hat:
      return inst.a * x - hat_matrix(x, inst.aut) * inst.b;
    case EquationKind::stein_hat:
      return x - inst.a * hat_matrix(x, inst.aut) * inst.b;
    case EquationKind::two_sided:
      if (!y) throw std::invalid_argument("two_sided equation needs both X and Y");
      return inst.a * x - *y * inst.b;
  }
  throw std::logic_error("unhandled equation kind");
}

QMatrix residual(const EquationInstance& inst, const QMatrix& x, const std::optional<QMatrix>& y) {
  return apply_lhs(inst, x, y) - inst.c;
}

std::vector<Rational> real_coordinates(const QMatrix& m) {
  std::vector<Rational> out;
  out.reserve(4 * m.data().size());
  for (const auto& q : m.data()) {
    out.push_back(q.a);
    out.push_back(q.b);
    out.push_back(q.c);
    out.push_back(q.d);
  }
  return out;
}

QMatrix from_real_coordinates(const std::vector<Rational>& coords, std::size_t rows,
                              std::size_t cols, std::size_t offset) {
  if (offset + 4 * rows * cols > coords.size())
    throw DimensionError("coordinate vector too short for " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  QMatrix out(rows, cols);
  for (std::size_t e = 0; e < rows * cols; ++e) {
    const std::size_t base = offset + 4 * e;
    out(e / cols, e % cols) = Quaternion(coords[base], coords[base + 1], coords[base + 2],
                                         coords[base + 3]);
  }
  return out;
}

OperatorSystem build_operator_matrix(const EquationInstance& inst) {
  const std::size_t m = inst.m();
  const std::size_t n = inst.n();
  const std::size_t block = 4 * m * n;
  const std::array<Quaternion, 4> units = {Quaternion(1), Quaternion::i(), Quaternion::j(),
                                           Quaternion::k()};
  OperatorSystem sys{RMatrix(block, block * inst.unknowns()), real_coordinates(inst.c)};

  for (std::size_t which = 0; which < inst.unknowns(); ++which) {
    for (std::size_t e = 0; e < m * n; ++e) {
      for (std::size_t q = 0; q < 4; ++q) {
        QMatrix basis(m, n);
        basis(e / n, e % n) = units[q];
        QMatrix image;
        if (inst.kind == EquationKind::two_sided)
          image = which == 0 ? apply_lhs(inst, basis, QMatrix(m, n))
                             : apply_lhs(inst, QMatrix(m, n), basis);
        else
          image = apply_lhs(inst, basis);
        const auto coords = real_coordinates(image);
        const std::size_t col = which * block + 4 * e + q;
        for (std::size_t r = 0; r < block; ++r) sys.op(r, col) = coords[r];
      }
    }
  }
  return sys;
}

}  // namespace qroth
