// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nested-alloc: generate, solve, verify and benchmark nested allocation
// instances.
//
// Exit codes: 0 success (optimal / pass), 1 error, 2 infeasible,
// 3 verification failure, 4 timeout.

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nested/bench.hpp"
#include "nested/generate.hpp"
#include "nested/hull.hpp"
#include "nested/oracles.hpp"
#include "nested/serialize.hpp"
#include "nested/solver.hpp"
#include "nested/verify.hpp"

namespace {

using namespace nested;

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitTimeout = 4;

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
  } else {
    write_file(path, text + '\n');
  }
}

struct GenArgs {
  std::string family;
  Index n = 0;
  Index m = 0;
  std::uint64_t seed = 0;
  std::string mode = "cont";
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  const GeneratorFamily family = parse_generator_family(args.family);
  const Index m = args.m == 0 ? args.n : args.m;
  const NestedInstance inst = parse_mode(args.mode) == Mode::kInteger
                                  ? generate_integer(family, args.n, m, args.seed)
                                  : generate(family, args.n, m, args.seed);
  emit(args.out, write_instance(inst));
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string solver = "decomp";
  double epsilon = 1e-8;
  double time_limit_s = 0.0;
  bool stats = false;
  std::string out;
};

int cmd_solve(const SolveArgs& args) {
  const NestedInstance inst = read_instance(read_file(args.instance));
  const SolverKind kind = parse_solver(args.solver);
  Solution sol;
  std::optional<SolveStats> stats;
  switch (kind) {
    case SolverKind::kDecomposition: {
      SolveOptions options;
      options.epsilon = args.epsilon;
      if (args.time_limit_s > 0.0) {
        options.deadline = std::chrono::steady_clock::now() +
                           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(args.time_limit_s));
      }
      const SolveResult result = solve(inst, options);
      sol = result.solution;
      stats = result.stats;
      break;
    }
    case SolverKind::kGreedy:
      if (inst.mode != Mode::kInteger) throw std::invalid_argument("greedy needs an integer instance");
      sol = greedy_nested(inst);
      if (sol.status == Status::kOptimal) {
        stats = SolveStats{};
        stats->active_constraints = count_active(inst, sol, 0.0);
      }
      break;
    case SolverKind::kHull: {
      HullResult details;
      sol = hull_solve(inst, &details);
      if (!details.applicable) {
        throw std::runtime_error("hull solution leaves the box; instance not hull-applicable");
      }
      stats = SolveStats{};
      stats->active_constraints = details.active;
      break;
    }
  }
  Json out = stats && args.stats ? solution_to_json(sol, *stats) : solution_to_json(sol);
  emit(args.out, out.dump(2));
  if (sol.status == Status::kInfeasible) return kExitInfeasible;
  if (sol.status == Status::kTimeout) return kExitTimeout;
  return 0;
}

struct VerifyArgs {
  std::string instance;
  std::string solution;
  std::optional<double> tau;
  std::string out;
};

int cmd_verify(const VerifyArgs& args) {
  const NestedInstance inst = read_instance(read_file(args.instance));
  const Solution sol = solution_from_json(Json::parse(read_file(args.solution)));
  if (sol.x.size() != inst.n) {
    throw std::invalid_argument("solution has " + std::to_string(sol.x.size()) +
                                " entries, instance has n = " + std::to_string(inst.n));
  }
  Json report;
  bool pass = false;
  if (inst.mode == Mode::kInteger) {
    const ExchangeReport exchange = verify_integer(inst, sol);
    report = report_to_json(exchange);
    report["feasibility"] = report_to_json(check_solution_feasibility(inst, sol.x, 0.0));
    pass = exchange.feasible && exchange.optimal;
  } else {
    const double tau = args.tau.value_or(sol.epsilon > 0.0 ? sol.epsilon : 1e-8);
    const KktReport kkt = verify_kkt(inst, sol, tau);
    report = report_to_json(kkt);
    report["tau"] = tau;
    report["feasibility"] = report_to_json(check_solution_feasibility(inst, sol.x, tau));
    pass = kkt.verdict;
  }
  emit(args.out, report.dump(2));
  return pass ? 0 : kExitVerifyFailed;
}

struct BenchArgs {
  std::string config;
  std::vector<std::string> families;
  std::vector<Index> n_list;
  std::vector<Index> m_list;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::optional<std::string> mode;
  std::optional<std::string> solver;
  std::optional<double> time_limit_s;
  std::string out;
};

int cmd_bench(const BenchArgs& args) {
  BenchConfig config;
  Json j = args.config.empty() ? Json::object() : Json::parse(read_file(args.config));
  if (!args.families.empty()) j["families"] = args.families;
  if (!args.n_list.empty()) j["n_list"] = args.n_list;
  if (!args.m_list.empty()) j["m_list"] = args.m_list;
  if (args.trials) j["trials"] = *args.trials;
  if (args.seed) j["seed"] = *args.seed;
  if (args.epsilon) j["epsilon"] = *args.epsilon;
  if (args.mode) j["mode"] = *args.mode;
  if (args.solver) j["solver"] = *args.solver;
  if (args.time_limit_s) j["time_limit_s"] = *args.time_limit_s;
  if (!args.out.empty()) j["output"] = args.out;
  config = bench_config_from_json(j);

  std::signal(SIGINT, on_sigint);
  if (config.output.empty() || config.output == "-") {
    run_bench(config, std::cout, bench_threads(), &g_interrupted);
  } else {
    std::ofstream file(config.output);
    if (!file) throw std::runtime_error("cannot write " + config.output);
    run_bench(config, file, bench_threads(), &g_interrupted);
  }
  if (g_interrupted.load()) {
    std::cerr << "interrupted; partial results written\n";
    return 130;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested resource allocation: generate, solve, verify, benchmark"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance as JSON");
  gen_cmd->add_option("--family", gen.family, "f, f-uniform, f-active, crashing, fuelopt")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Number of variables")->required();
  gen_cmd->add_option("--m", gen.m, "Number of nested blocks (default n)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--mode", gen.mode, "int or cont");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("instance", solve_args.instance, "Instance JSON")->required();
  solve_cmd->add_option("--solver", solve_args.solver, "decomp, greedy or hull");
  solve_cmd->add_option("--epsilon", solve_args.epsilon, "Continuous accuracy");
  solve_cmd->add_option("--time-limit-s", solve_args.time_limit_s, "Cooperative time limit");
  solve_cmd->add_flag("--stats", solve_args.stats, "Include solver statistics");
  solve_cmd->add_option("--out", solve_args.out, "Output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution for an instance");
  verify_cmd->add_option("instance", verify_args.instance, "Instance JSON")->required();
  verify_cmd->add_option("solution", verify_args.solution, "Solution JSON")->required();
  verify_cmd->add_option("--tau", verify_args.tau, "Accuracy of x (default: solution epsilon)");
  verify_cmd->add_option("--out", verify_args.out, "Report file (default stdout)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark sweep, CSV output");
  bench_cmd->add_option("config", bench_args.config, "BenchConfig JSON");
  bench_cmd->add_option("--family", bench_args.families, "Families (repeatable)");
  bench_cmd->add_option("--n", bench_args.n_list, "Sizes (repeatable)");
  bench_cmd->add_option("--m", bench_args.m_list, "Block counts (repeatable; default m = n)");
  bench_cmd->add_option("--trials", bench_args.trials, "Instances per cell");
  bench_cmd->add_option("--seed", bench_args.seed, "Base seed");
  bench_cmd->add_option("--epsilon", bench_args.epsilon, "Continuous accuracy");
  bench_cmd->add_option("--mode", bench_args.mode, "int or cont");
  bench_cmd->add_option("--solver", bench_args.solver, "decomp, greedy or hull");
  bench_cmd->add_option("--time-limit-s", bench_args.time_limit_s, "Per-run time limit");
  bench_cmd->add_option("--out", bench_args.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*solve_cmd) return cmd_solve(solve_args);
    if (*verify_cmd) return cmd_verify(verify_args);
    if (*bench_cmd) return cmd_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
