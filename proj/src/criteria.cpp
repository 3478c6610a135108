#include "qroth/criteria.hpp"

#include <stdexcept>

namespace qroth {

namespace {

void require_kind(const EquationInstance& inst, EquationKind expected) {
  if (inst.kind != expected)
    throw std::invalid_argument("criterion for " + std::string(to_string(expected)) +
                                " applied to a " + std::string(to_string(inst.kind)) +
                                " instance");
}

}  // namespace

CriterionReport check_roth_hat(const EquationInstance& inst) {
  require_kind(inst, EquationKind::sylvester_hat);
  const CMatrix full = twisted_adjoint(block_2x2(inst.a, inst.c, inst.b), inst.aut);
  const CMatrix diag = twisted_adjoint(block_diag(inst.a, inst.b), inst.aut);
  SmithForm full_sf = smith_normal_form(characteristic_matrix(full));
  SmithForm diag_sf = smith_normal_form(characteristic_matrix(diag));

  CriterionReport out;
  out.method = "hat-similarity via invariant factors of twisted complex adjoints";
  out.verdict = full_sf == diag_sf;
  out.invariants.push_back({"xI - twisted([[A,C],[0,B]])", std::move(full_sf), std::nullopt});
  out.invariants.push_back({"xI - twisted([[A,0],[0,B]])", std::move(diag_sf), std::nullopt});
  return out;
}

CriterionReport check_wimmer_hat(const EquationInstance& inst) {
  require_kind(inst, EquationKind::stein_hat);
  const QMatrix id_m = fill_block(BlockFill::identity, inst.m());
  const QMatrix id_n = fill_block(BlockFill::identity, inst.n());
  const CMatrix lead = complex_adjoint(block_diag(id_m, inst.b));
  const Pencil with_c(lead, twisted_adjoint(block_2x2(inst.a, inst.c, id_n), inst.aut));
  const Pencil without_c(lead, twisted_adjoint(block_diag(inst.a, id_n), inst.aut));

  CriterionReport out;
  out.method = "strict equivalence of regular pencils built from twisted complex adjoints";
  SmithForm with_finite = smith_normal_form(with_c.matrix());
  SmithForm without_finite = smith_normal_form(without_c.matrix());
  const std::size_t size = with_c.size();
  if (with_finite.rank < size || without_finite.rank < size) {
    out.status = CriterionStatus::non_regular_pencil;
    out.verdict = false;
  } else {
    SmithForm with_inf = smith_normal_form(with_c.reversed());
    SmithForm without_inf = smith_normal_form(without_c.reversed());
    out.verdict = with_finite == without_finite && with_inf == without_inf;
    out.invariants.push_back({"x L + M_C (reversed)", std::move(with_inf), std::nullopt});
    out.invariants.push_back({"x L + M_0 (reversed)", std::move(without_inf), std::nullopt});
  }
  out.invariants.insert(out.invariants.begin(),
                        {{"x L + M_C", std::move(with_finite), std::nullopt},
                         {"x L + M_0", std::move(without_finite), std::nullopt}});
  return out;
}

CriterionReport check_rank_equivalence(const EquationInstance& inst) {
  require_kind(inst, EquationKind::two_sided);
  const std::size_t full = quaternion_rank(block_2x2(inst.a, inst.c, inst.b));
  const std::size_t diag = quaternion_rank(block_diag(inst.a, inst.b));
  CriterionReport out;
  out.method = "equal quaternion rank of block matrices";
  out.verdict = full == diag;
  out.invariants.push_back({"rank [[A,C],[0,B]]", std::nullopt, full});
  out.invariants.push_back({"rank [[A,0],[0,B]]", std::nullopt, diag});
  return out;
}

CriterionReport check_criterion(const EquationInstance& inst) {
  switch (inst.kind) {
    case EquationKind::sylvester_hat: return check_roth_hat(inst);
    case EquationKind::stein_hat: return check_wimmer_hat(inst);
    case EquationKind::two_sided: return check_rank_equivalence(inst);
  }
  throw std::logic_error("unhandled equation kind");
}

}  // namespace qroth
