#include "helpers.hpp"

using namespace qroth;
using namespace qroth::test;

namespace {

EquationInstance scalar_instance(EquationKind kind, const Quaternion& a, const Quaternion& b,
                                 const Quaternion& c, int eps) {
  return EquationInstance(kind, scalar(a), scalar(b), scalar(c), Automorphism(eps));
}

void check_biconditional(EquationKind kind, std::uint64_t seed, int count) {
  SuiteOptions opts;
  opts.count = static_cast<std::size_t>(count);
  opts.seed = seed;
  opts.max_dim = 2;
  opts.kinds = {kind};
  int solvable = 0;
  for (const auto& params : suite_parameters(opts)) {
    const auto inst = generate_instance(params).instance;
    const bool verdict = check_criterion(inst).verdict;
    const bool solved = solve_equation(inst).solvable();
    CHECK(verdict == solved);
    solvable += solved;
  }
  CHECK(solvable > 0);
  CHECK(solvable < count);
}

}  // namespace

TEST_CASE("roth-type criterion examples") {
  auto report = check_roth_hat(scalar_instance(EquationKind::sylvester_hat, q(0), q(0), q(1), 1));
  CHECK_FALSE(report.verdict);
  CHECK(report.status == CriterionStatus::decided);
  REQUIRE(report.invariants.size() == 2);
  CHECK_FALSE(report.invariants[0].smith == report.invariants[1].smith);

  CHECK(check_roth_hat(scalar_instance(EquationKind::sylvester_hat, q(1), q(1), Quaternion::j(), -1))
            .verdict);
  CHECK_FALSE(
      check_roth_hat(scalar_instance(EquationKind::sylvester_hat, q(1), q(1), Quaternion::j(), 1))
          .verdict);
  CHECK_THROWS_AS(check_roth_hat(scalar_instance(EquationKind::stein_hat, q(1), q(1), q(1), 1)),
                  std::invalid_argument);
}

TEST_CASE("pencil criterion examples") {
  CHECK_FALSE(
      check_wimmer_hat(scalar_instance(EquationKind::stein_hat, q(1), q(1), q(1), 1)).verdict);
  const EquationInstance zero_c(EquationKind::stein_hat, QMatrix{{q(1, 2), q(0, 0, 1)}, {q(3), q(0)}},
                                QMatrix{{q(0, 1, 1)}}, QMatrix(2, 1), Automorphism(-1));
  const auto report = check_wimmer_hat(zero_c);
  CHECK(report.verdict);
  CHECK(report.status == CriterionStatus::decided);
  CHECK(report.invariants.size() == 4);

  Rng rng(41);
  for (int t = 0; t < 6; ++t) {
    EquationInstance e(EquationKind::stein_hat, random_qmatrix(rng, 2, 2, 4),
                       random_qmatrix(rng, 1, 1, 4), QMatrix(2, 1), Automorphism(t % 2 ? 1 : -1));
    e.c = apply_lhs(e, random_qmatrix(rng, 2, 1, 4));
    CHECK(check_wimmer_hat(e).verdict);
  }
}

TEST_CASE("rank criterion examples") {
  auto report =
      check_rank_equivalence(scalar_instance(EquationKind::two_sided, q(0), q(0), q(0, 1), 1));
  CHECK_FALSE(report.verdict);
  CHECK(report.invariants[0].rank == 1u);
  CHECK(report.invariants[1].rank == 0u);
  CHECK(check_rank_equivalence(
            EquationInstance(EquationKind::two_sided, QMatrix{{q(1), q(2)}, {q(2), q(4)}},
                             QMatrix{{q(0, 0, 1)}}, QMatrix(2, 1), Automorphism(1)))
            .verdict);
  Rng rng(42);
  for (int t = 0; t < 6; ++t) {
    EquationInstance e(EquationKind::two_sided, random_qmatrix(rng, 2, 2, 4),
                       random_qmatrix(rng, 2, 2, 4), QMatrix(2, 2), Automorphism(1));
    e.c = apply_lhs(e, random_qmatrix(rng, 2, 2, 4), random_qmatrix(rng, 2, 2, 4));
    CHECK(check_rank_equivalence(e).verdict);
  }
}

TEST_CASE("identity automorphism reduces to similarity of complex adjoints") {
  Rng rng(43);
  for (int t = 0; t < 12; ++t) {
    GenerateOptions g;
    g.kind = EquationKind::sylvester_hat;
    g.m = 1 + t % 2;
    g.n = 1 + (t / 2) % 2;
    g.epsilon = 1;
    g.mode = t % 3 ? GenerateMode::arbitrary : GenerateMode::solvable;
    g.seed = static_cast<std::uint64_t>(rng.uniform(0, 1 << 30));
    const auto inst = generate_instance(g).instance;
    const bool similar = similar_over_C(complex_adjoint(block_2x2(inst.a, inst.c, inst.b)),
                                        complex_adjoint(block_diag(inst.a, inst.b)));
    CHECK(check_roth_hat(inst).verdict == similar);
  }
}

TEST_CASE("criterion verdict equals solvability") {
  check_biconditional(EquationKind::sylvester_hat, 5, 40);
  check_biconditional(EquationKind::stein_hat, 6, 40);
  check_biconditional(EquationKind::two_sided, 7, 40);
}
