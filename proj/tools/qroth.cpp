// qroth: command-line front end for the quaternion equation solvers and
// block-matrix solvability criteria.
//
// Exit codes: 0 success, 1 command failure, 2 invariant violation found by
// validate-suite.

#include "qroth/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using qroth::json;

struct Common {
  std::string out;
  bool timing = false;
};

void emit(const json& report, const Common& common) {
  const std::string text = report.dump(2) + "\n";
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(common.out);
  if (!f) throw qroth::InputError(common.out + ": cannot open for writing");
  f << text;
}

template <typename F>
json timed(const Common& common, json report, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body(report);
  if (common.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return report;
}

qroth::QMatrix select_matrix(const std::string& path, const std::string& which) {
  const json j = qroth::read_json_file(path);
  if (j.contains("rows")) return qroth::qmatrix_from_json(j, path);
  const auto file = qroth::instance_file_from_json(j);
  if (which == "A") return file.instance.a;
  if (which == "B") return file.instance.b;
  if (which == "C") return file.instance.c;
  throw qroth::InputError("--which must be A, B or C");
}

json cmd_solve(const std::string& path, const Common& common) {
  return timed(common, json{{"command", "solve"}, {"input", path}}, [&](json& r) {
    const auto file = qroth::load_instance_file(path);
    const auto outcome = qroth::solve_equation(file.instance);
    r["kind"] = std::string(qroth::to_string(file.instance.kind));
    r["outcome"] = qroth::to_json(outcome);
    if (outcome.solvable())
      r["residual_zero"] =
          qroth::residual(file.instance, *outcome.solution, outcome.solution_y).is_zero();
  });
}

json cmd_check(const std::string& path, const Common& common) {
  return timed(common, json{{"command", "check"}, {"input", path}}, [&](json& r) {
    const auto inst = qroth::load_instance(path);
    r["kind"] = std::string(qroth::to_string(inst.kind));
    r["outcome"] = qroth::to_json(qroth::check_criterion(inst));
  });
}

json cmd_verify(const std::string& path, const std::string& witness_path, const Common& common) {
  return timed(common, json{{"command", "verify"}, {"input", path}}, [&](json& r) {
    const auto file = qroth::load_instance_file(path);
    const auto& inst = file.instance;
    r["kind"] = std::string(qroth::to_string(inst.kind));
    if (!witness_path.empty()) {
      const auto w = qroth::witness_from_json(qroth::read_json_file(witness_path));
      r["witness_source"] = witness_path;
      r["witness_valid"] = qroth::verify_witness(inst, w);
    }
    if (file.known_solution) {
      const bool zero =
          qroth::residual(inst, *file.known_solution, file.known_solution_y).is_zero();
      r["known_solution_residual_zero"] = zero;
      if (zero) {
        const auto w = qroth::build_witness(inst, *file.known_solution, file.known_solution_y);
        r["known_solution_witness"] = qroth::to_json(w);
        r["known_solution_witness_valid"] = qroth::verify_witness(inst, w);
      }
    }
    if (witness_path.empty() && !file.known_solution) {
      const auto outcome = qroth::solve_equation(inst);
      r["solvable"] = outcome.solvable();
      if (outcome.solvable()) {
        const auto w = qroth::build_witness(inst, *outcome.solution, outcome.solution_y);
        r["solver_witness"] = qroth::to_json(w);
        r["solver_witness_valid"] = qroth::verify_witness(inst, w);
      }
    }
  });
}

json cmd_adjoint(const std::string& path, const std::string& which, int eps, const Common& common) {
  return timed(common, json{{"command", "adjoint"}, {"input", path}}, [&](json& r) {
    const auto m = select_matrix(path, which);
    r["complex_adjoint"] = qroth::to_json(qroth::complex_adjoint(m));
    if (eps != 0) {
      r["epsilon"] = eps;
      r["twisted_adjoint"] = qroth::to_json(qroth::twisted_adjoint(m, qroth::Automorphism(eps)));
    }
  });
}

json cmd_realrep(const std::string& path, const std::string& which, const Common& common) {
  return timed(common, json{{"command", "realrep"}, {"input", path}}, [&](json& r) {
    r["real_rep"] = qroth::to_json(qroth::real_rep(select_matrix(path, which)));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and solvability criteria for AX - hat(X)B = C, X - A hat(X)B = C "
               "and AX - YB = C over the quaternions"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out, "Write the report to this file instead of stdout");
  app.add_flag("--timing", common.timing, "Include wall-clock timing in the report");

  std::string input;
  std::string witness_path;
  std::string which = "A";
  int adj_eps = 0;

  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("file", input, "Instance file")->required()->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "Decide solvability by the block-matrix criterion");
  check->add_option("file", input, "Instance file")->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Verify witnesses and the known solution");
  verify->add_option("file", input, "Instance file")->required()->check(CLI::ExistingFile);
  verify->add_option("--witness", witness_path, "Witness file {kind, S, R}")
      ->check(CLI::ExistingFile);

  auto* adjoint = app.add_subcommand("adjoint", "Complex (and twisted) adjoint of a matrix");
  adjoint->add_option("file", input, "Matrix or instance file")->required()->check(CLI::ExistingFile);
  adjoint->add_option("--which", which, "Matrix of an instance file: A, B or C");
  adjoint->add_option("--eps", adj_eps, "Also emit the twisted adjoint for this epsilon")
      ->check(CLI::IsMember({-1, 1}));

  auto* realrep = app.add_subcommand("realrep", "Real 4n x 4n representation of a square matrix");
  realrep->add_option("file", input, "Matrix or instance file")->required()->check(CLI::ExistingFile);
  realrep->add_option("--which", which, "Matrix of an instance file: A, B or C");

  qroth::GenerateOptions gen_opts;
  std::string kind_name = "sylvester_hat";
  std::string mode_name = "solvable";
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance file");
  gen->add_option("--kind", kind_name, "sylvester_hat | stein_hat | two_sided");
  gen->add_option("--m", gen_opts.m, "Rows of C")->check(CLI::Range(1, 6));
  gen->add_option("--n", gen_opts.n, "Columns of C")->check(CLI::Range(1, 6));
  gen->add_option("--eps", gen_opts.epsilon, "Automorphism parameter")->check(CLI::IsMember({-1, 1}));
  gen->add_option("--seed", gen_opts.seed, "PRNG seed");
  gen->add_option("--mode", mode_name, "solvable | arbitrary");
  gen->add_option("--magnitude", gen_opts.magnitude, "Bound on drawn numerators/denominators")
      ->check(CLI::PositiveNumber);
  gen->add_flag("--complex", gen_opts.complex_coefficients, "Complex A and B");

  qroth::SuiteOptions suite_opts;
  std::string suite_kind = "all";
  auto* suite = app.add_subcommand("validate-suite", "Cross-check criteria against the solver");
  suite->add_option("--count", suite_opts.count, "Instances per kind");
  suite->add_option("--seed", suite_opts.seed, "Suite seed");
  suite->add_option("--max-dim", suite_opts.max_dim, "Largest m and n")->check(CLI::Range(1, 6));
  suite->add_option("--kind", suite_kind, "all | sylvester_hat | stein_hat | two_sided");
  suite->add_flag("--complex", suite_opts.complex_coefficients, "Complex A and B");
  suite->add_option("--threads", suite_opts.threads, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) {
      emit(cmd_solve(input, common), common);
    } else if (*check) {
      emit(cmd_check(input, common), common);
    } else if (*verify) {
      emit(cmd_verify(input, witness_path, common), common);
    } else if (*adjoint) {
      emit(cmd_adjoint(input, which, adj_eps, common), common);
    } else if (*realrep) {
      emit(cmd_realrep(input, which, common), common);
    } else if (*gen) {
      gen_opts.kind = qroth::parse_kind(kind_name);
      gen_opts.mode = qroth::parse_mode(mode_name);
      json file = qroth::to_json(qroth::generate_instance(gen_opts));
      file["generator"] = {{"kind", kind_name},        {"m", gen_opts.m},
                           {"n", gen_opts.n},          {"epsilon", gen_opts.epsilon},
                           {"seed", gen_opts.seed},    {"mode", mode_name},
                           {"magnitude", gen_opts.magnitude},
                           {"complex", gen_opts.complex_coefficients}};
      emit(file, common);
    } else if (*suite) {
      if (suite_kind != "all") suite_opts.kinds = {qroth::parse_kind(suite_kind)};
      if (suite_opts.threads == 0) suite_opts.threads = std::max(1u, std::thread::hardware_concurrency());
      bool ok = false;
      json report = timed(common,
                          json{{"command", "validate-suite"},
                               {"seed", suite_opts.seed},
                               {"count", suite_opts.count},
                               {"max_dim", suite_opts.max_dim}},
                          [&](json& r) {
                            const auto result = qroth::run_validation_suite(suite_opts);
                            ok = result.ok();
                            r["result"] = qroth::to_json(result);
                          });
      emit(report, common);
      return ok ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "qroth: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
