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

#include "nested/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "nested/generate.hpp"
#include "nested/hull.hpp"
#include "nested/oracles.hpp"
#include "nested/solver.hpp"
#include "nested/verify.hpp"

namespace nested {
namespace {

using Clock = std::chrono::steady_clock;

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

template <typename T>
std::vector<T> list_field(const Json& j, const char* name, bool required) {
  if (!j.contains(name)) {
    if (required) throw ValidationError(name, "missing");
    return {};
  }
  if (!j.at(name).is_array()) throw ValidationError(name, "expected an array");
  try {
    return j.at(name).get<std::vector<T>>();
  } catch (const Json::exception& e) {
    throw ValidationError(name, e.what());
  }
}

}  // namespace

const char* const kBenchHeader =
    "family,n,m,seed,solver,mode,epsilon,objective,active,rap_calls,wall_ms,status";

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::kDecomposition:
      return "decomp";
    case SolverKind::kGreedy:
      return "greedy";
    case SolverKind::kHull:
      return "hull";
  }
  return "?";
}

SolverKind parse_solver(const std::string& text) {
  if (text == "decomp" || text == "decomposition") return SolverKind::kDecomposition;
  if (text == "greedy") return SolverKind::kGreedy;
  if (text == "hull") return SolverKind::kHull;
  throw std::invalid_argument("unknown solver '" + text + "'");
}

void BenchConfig::validate() const {
  if (families.empty()) throw ValidationError("families", "must not be empty");
  if (n_list.empty()) throw ValidationError("n_list", "must not be empty");
  for (Index n : n_list) {
    if (n < 1) throw ValidationError("n_list", "sizes must be positive");
  }
  for (Index m : m_list) {
    if (m < 1) throw ValidationError("m_list", "sizes must be positive");
  }
  if (trials < 1) throw ValidationError("trials", "must be at least 1");
  if (mode == Mode::kContinuous && !(epsilon > 0.0)) {
    throw ValidationError("epsilon", "must be positive in continuous mode");
  }
  if (!(time_limit_s > 0.0)) throw ValidationError("time_limit_s", "must be positive");
  if (solver == SolverKind::kGreedy && mode != Mode::kInteger) {
    throw ValidationError("solver", "greedy needs integer mode");
  }
  if (solver == SolverKind::kHull) {
    if (mode != Mode::kContinuous) throw ValidationError("solver", "hull needs continuous mode");
    for (GeneratorFamily f : families) {
      if (f != GeneratorFamily::kCrashing && f != GeneratorFamily::kFuelOpt) {
        throw ValidationError("families", "family not hull-eligible: " + nested::to_string(f));
      }
    }
  }
}

BenchConfig bench_config_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("config", "expected a JSON object");
  BenchConfig config;
  for (const std::string& name : list_field<std::string>(j, "families", true)) {
    try {
      config.families.push_back(parse_generator_family(name));
    } catch (const std::invalid_argument& e) {
      throw ValidationError("families", e.what());
    }
  }
  config.n_list = list_field<Index>(j, "n_list", true);
  config.m_list = list_field<Index>(j, "m_list", false);
  try {
    config.trials = j.value("trials", config.trials);
    config.seed = j.value("seed", config.seed);
    config.epsilon = j.value("epsilon", config.epsilon);
    config.time_limit_s = j.value("time_limit_s", config.time_limit_s);
    config.output = j.value("output", config.output);
    if (j.contains("mode")) config.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("solver")) config.solver = parse_solver(j.at("solver").get<std::string>());
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError("config", e.what());
  }
  config.validate();
  return config;
}

Json bench_config_to_json(const BenchConfig& config) {
  Json families = Json::array();
  for (GeneratorFamily f : config.families) families.push_back(to_string(f));
  return Json{{"families", families},         {"n_list", config.n_list},
              {"m_list", config.m_list},      {"trials", config.trials},
              {"seed", config.seed},          {"epsilon", config.epsilon},
              {"mode", to_string(config.mode)}, {"solver", to_string(config.solver)},
              {"time_limit_s", config.time_limit_s}, {"output", config.output}};
}

std::string format_bench_row(const BenchRow& row) {
  std::ostringstream out;
  out << row.family << ',' << row.n << ',' << row.m << ',' << row.seed << ',' << row.solver << ','
      << row.mode << ',' << format_double(row.epsilon) << ',' << format_double(row.objective) << ','
      << format_double(row.active) << ',' << format_double(row.rap_calls) << ','
      << format_double(row.wall_ms) << ',' << row.status;
  return out.str();
}

BenchRow parse_bench_row(const std::string& line) {
  const std::vector<std::string> cells = split_csv(line);
  if (cells.size() != 12) throw std::invalid_argument("expected 12 columns: " + line);
  BenchRow row;
  try {
    row.family = cells[0];
    row.n = std::stol(cells[1]);
    row.m = std::stol(cells[2]);
    row.seed = std::stoull(cells[3]);
    row.solver = cells[4];
    row.mode = cells[5];
    row.epsilon = std::stod(cells[6]);
    row.objective = std::stod(cells[7]);
    row.active = std::stod(cells[8]);
    row.rap_calls = std::stod(cells[9]);
    row.wall_ms = std::stod(cells[10]);
    row.status = cells[11];
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed row: " + line);
  }
  return row;
}

BenchRow run_single(const BenchConfig& config, GeneratorFamily family, Index n, Index m,
                    std::uint64_t seed) {
  BenchRow row;
  row.family = to_string(family);
  row.n = n;
  row.m = m;
  row.seed = seed;
  row.solver = to_string(config.solver);
  row.mode = to_string(config.mode);
  row.epsilon = config.mode == Mode::kContinuous ? config.epsilon : 0.0;
  try {
    const NestedInstance inst = config.mode == Mode::kInteger ? generate_integer(family, n, m, seed)
                                                              : generate(family, n, m, seed);
    Solution sol;
    const auto started = Clock::now();
    switch (config.solver) {
      case SolverKind::kDecomposition: {
        SolveOptions options;
        options.epsilon = config.epsilon;
        options.deadline = started + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(config.time_limit_s));
        const SolveResult result = solve(inst, options);
        row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        sol = result.solution;
        row.active = static_cast<double>(result.stats.active_constraints);
        row.rap_calls = static_cast<double>(result.stats.rap_calls);
        break;
      }
      case SolverKind::kGreedy: {
        sol = greedy_nested(inst);
        row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        if (sol.status == Status::kOptimal) row.active = static_cast<double>(count_active(inst, sol, 0.0));
        break;
      }
      case SolverKind::kHull: {
        HullResult details;
        sol = hull_solve(inst, &details);
        row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        row.active = static_cast<double>(details.active);
        if (!details.applicable) {
          row.status = "not_applicable";
          return row;
        }
        break;
      }
    }
    row.status = to_string(sol.status);
    if (sol.status == Status::kOptimal) row.objective = sol.objective;
  } catch (const std::exception&) {
    row.status = "error";
  }
  return row;
}

long run_bench(const BenchConfig& config, std::ostream& out, int threads,
               const std::atomic<bool>* stop) {
  config.validate();
  const auto stopped = [stop] { return stop != nullptr && stop->load(); };
  threads = std::max(1, std::min(threads, config.trials));
  out << kBenchHeader << '\n';
  long written = 0;
  for (GeneratorFamily family : config.families) {
    for (Index n : config.n_list) {
      std::vector<Index> ms = config.m_list.empty() ? std::vector<Index>{n} : config.m_list;
      for (Index m : ms) {
        if (m > n) continue;
        std::vector<BenchRow> rows(static_cast<size_t>(config.trials));
        std::vector<char> done(rows.size(), 0);
        std::atomic<int> next{0};
        const auto worker = [&] {
          for (int t = next++; t < config.trials && !stopped(); t = next++) {
            rows[static_cast<size_t>(t)] =
                run_single(config, family, n, m, config.seed + static_cast<std::uint64_t>(t));
            done[static_cast<size_t>(t)] = 1;
          }
        };
        if (threads == 1) {
          worker();
        } else {
          std::vector<std::thread> pool;
          for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
          for (std::thread& th : pool) th.join();
        }

        BenchRow aggregate;
        int count = 0;
        int solved = 0;
        for (size_t t = 0; t < rows.size(); ++t) {
          if (!done[t]) continue;
          const BenchRow& row = rows[t];
          out << format_bench_row(row) << '\n';
          ++written;
          ++count;
          aggregate.wall_ms += row.wall_ms;
          aggregate.active += row.active;
          aggregate.rap_calls += row.rap_calls;
          if (row.status == "optimal") {
            aggregate.objective += row.objective;
            ++solved;
          }
        }
        if (count > 0) {
          aggregate.family = to_string(family);
          aggregate.n = n;
          aggregate.m = m;
          aggregate.seed = config.seed;
          aggregate.solver = to_string(config.solver);
          aggregate.mode = to_string(config.mode);
          aggregate.epsilon = config.mode == Mode::kContinuous ? config.epsilon : 0.0;
          aggregate.wall_ms /= count;
          aggregate.active /= count;
          aggregate.rap_calls /= count;
          aggregate.objective = solved > 0 ? aggregate.objective / solved : 0.0;
          aggregate.status = "aggregate";
          out << format_bench_row(aggregate) << '\n';
        }
        out.flush();
        if (stopped()) return written;
      }
    }
  }
  return written;
}

int bench_threads() {
  if (const char* env = std::getenv("NESTED_ALLOC_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace nested
