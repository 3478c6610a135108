#pragma once

// Batch cross-validation: for seeded instances, the criterion verdict must
// equal the solver's solvability verdict, every solution must have zero
// residual and every witness built from a solution must verify.

#include "qroth/generate.hpp"

#include <cstdint>
#include <vector>

namespace qroth {

struct SuiteOptions {
  std::size_t count = 200;
  std::uint64_t seed = 1;
  std::size_t max_dim = 3;
  std::vector<EquationKind> kinds = {EquationKind::sylvester_hat, EquationKind::stein_hat,
                                     EquationKind::two_sided};
  bool complex_coefficients = false;
  unsigned threads = 1;
};

struct SuiteCase {
  GenerateOptions params;
  bool criterion_verdict = false;
  bool solvable = false;
  bool residual_zero = true;
  bool witness_ok = true;
  bool known_solution_ok = true;
  /// Message of an exception raised while evaluating the case.
  std::string error;

  [[nodiscard]] bool agree() const { return error.empty() && criterion_verdict == solvable; }
  [[nodiscard]] bool passed() const {
    return agree() && residual_zero && witness_ok && known_solution_ok;
  }
};

struct KindTally {
  EquationKind kind;
  std::size_t total = 0;
  std::size_t agree = 0;
  std::size_t solvable = 0;
  std::size_t unsolvable = 0;
  std::size_t residual_failures = 0;
  std::size_t witness_failures = 0;
};

struct SuiteResult {
  std::vector<SuiteCase> cases;
  std::vector<KindTally> tallies;

  [[nodiscard]] bool ok() const;
};

/// Case parameters, drawn in order from Rng(opts.seed): per case m and n in
/// [1, max_dim], epsilon +-1 and a generator seed. Modes alternate
/// solvable / arbitrary within each kind.
std::vector<GenerateOptions> suite_parameters(const SuiteOptions& opts);

SuiteCase evaluate_case(const GenerateOptions& params);

/// Results are ordered by case regardless of the thread count.
SuiteResult run_validation_suite(const SuiteOptions& opts);

json to_json(const SuiteResult& result);

}  // namespace qroth
