#include "qroth/suite.hpp"

#include <atomic>
#include <limits>
#include <thread>

namespace qroth {

bool SuiteResult::ok() const {
  for (const auto& c : cases)
    if (!c.passed()) return false;
  return true;
}

std::vector<GenerateOptions> suite_parameters(const SuiteOptions& opts) {
  std::vector<GenerateOptions> out;
  Rng meta(opts.seed);
  const long max_dim = static_cast<long>(std::max<std::size_t>(1, opts.max_dim));
  for (EquationKind kind : opts.kinds) {
    for (std::size_t i = 0; i < opts.count; ++i) {
      GenerateOptions g;
      g.kind = kind;
      g.m = static_cast<std::size_t>(meta.uniform(1, max_dim));
      g.n = static_cast<std::size_t>(meta.uniform(1, max_dim));
      g.epsilon = meta.coin() ? 1 : -1;
      g.seed = static_cast<std::uint64_t>(meta.uniform(0, std::numeric_limits<long>::max()));
      g.mode = i % 2 == 0 ? GenerateMode::solvable : GenerateMode::arbitrary;
      g.complex_coefficients = opts.complex_coefficients;
      out.push_back(g);
    }
  }
  return out;
}

SuiteCase evaluate_case(const GenerateOptions& params) {
  SuiteCase out;
  out.params = params;
  const InstanceFile file = generate_instance(params);
  const EquationInstance& inst = file.instance;

  out.criterion_verdict = check_criterion(inst).verdict;
  const SolveOutcome outcome = solve_equation(inst);
  out.solvable = outcome.solvable();
  if (outcome.solvable()) {
    out.residual_zero = residual(inst, *outcome.solution, outcome.solution_y).is_zero();
    if (out.residual_zero)
      out.witness_ok = verify_witness(inst, build_witness(inst, *outcome.solution, outcome.solution_y));
  }
  if (file.known_solution) {
    out.known_solution_ok =
        residual(inst, *file.known_solution, file.known_solution_y).is_zero() &&
        verify_witness(inst, build_witness(inst, *file.known_solution, file.known_solution_y));
  }
  return out;
}

SuiteResult run_validation_suite(const SuiteOptions& opts) {
  const auto params = suite_parameters(opts);
  SuiteResult result;
  result.cases.resize(params.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      try {
        result.cases[i] = evaluate_case(params[i]);
      } catch (const std::exception& e) {
        result.cases[i].params = params[i];
        result.cases[i].error = e.what();
      }
    }
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (EquationKind kind : opts.kinds) {
    KindTally tally{kind};
    for (const auto& c : result.cases) {
      if (c.params.kind != kind) continue;
      ++tally.total;
      if (c.agree()) ++tally.agree;
      if (c.solvable) ++tally.solvable; else ++tally.unsolvable;
      if (!c.residual_zero) ++tally.residual_failures;
      if (!c.witness_ok || !c.known_solution_ok) ++tally.witness_failures;
    }
    result.tallies.push_back(tally);
  }
  return result;
}

json to_json(const SuiteResult& result) {
  json tallies = json::array();
  for (const auto& t : result.tallies)
    tallies.push_back({{"kind", std::string(to_string(t.kind))},
                       {"total", t.total},
                       {"agree", t.agree},
                       {"solvable", t.solvable},
                       {"unsolvable", t.unsolvable},
                       {"residual_failures", t.residual_failures},
                       {"witness_failures", t.witness_failures}});
  json failures = json::array();
  for (const auto& c : result.cases) {
    if (c.passed()) continue;
    failures.push_back({{"kind", std::string(to_string(c.params.kind))},
                        {"m", c.params.m},
                        {"n", c.params.n},
                        {"epsilon", c.params.epsilon},
                        {"seed", c.params.seed},
                        {"mode", std::string(to_string(c.params.mode))},
                        {"criterion_verdict", c.criterion_verdict},
                        {"solvable", c.solvable},
                        {"residual_zero", c.residual_zero},
                        {"witness_ok", c.witness_ok},
                        {"known_solution_ok", c.known_solution_ok},
                        {"error", c.error}});
  }
  return json{{"passed", result.ok()}, {"per_kind", std::move(tallies)},
              {"failures", std::move(failures)}};
}

}  // namespace qroth
