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

#ifndef NESTED_BENCH_HPP
#define NESTED_BENCH_HPP

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nested/serialize.hpp"

namespace nested {

enum class SolverKind { kDecomposition, kGreedy, kHull };

std::string to_string(SolverKind kind);
/// Accepts "decomp", "decomposition", "greedy", "hull".
SolverKind parse_solver(const std::string& text);

/// Benchmark sweep. Cells are families x n_list x m_list; an empty m_list
/// means m = n, and cells with m > n are skipped. Integer mode uses the
/// small integer-data generator.
struct BenchConfig {
  std::vector<GeneratorFamily> families;
  std::vector<Index> n_list;
  std::vector<Index> m_list;
  int trials = 1;
  std::uint64_t seed = 0;
  double epsilon = 1e-8;
  Mode mode = Mode::kContinuous;
  SolverKind solver = SolverKind::kDecomposition;
  double time_limit_s = 600.0;
  std::string output;  // empty: standard output

  /// Throws ValidationError naming the field.
  void validate() const;
};

BenchConfig bench_config_from_json(const Json& j);
Json bench_config_to_json(const BenchConfig& config);

/// One CSV line. Data rows carry seed = base seed + trial and a status of
/// optimal, infeasible, timeout, not_applicable or error; aggregate rows carry
/// the base seed, status "aggregate" and means over the cell's data rows.
struct BenchRow {
  std::string family;
  Index n = 0;
  Index m = 0;
  std::uint64_t seed = 0;
  std::string solver;
  std::string mode;
  double epsilon = 0.0;
  double objective = 0.0;
  double active = 0.0;
  double rap_calls = 0.0;
  double wall_ms = 0.0;
  std::string status;
};

extern const char* const kBenchHeader;

std::string format_bench_row(const BenchRow& row);
/// Throws std::invalid_argument for malformed lines.
BenchRow parse_bench_row(const std::string& line);

/// Solves one generated instance the way a bench cell would.
BenchRow run_single(const BenchConfig& config, GeneratorFamily family, Index n, Index m,
                    std::uint64_t seed);

/// Runs the sweep and writes header, data rows (in trial order) and one
/// aggregate row per cell. Trials of a cell run on up to `threads` workers.
/// Setting `stop` ends the sweep after the running trials; completed rows
/// are written. Returns the number of data rows written.
long run_bench(const BenchConfig& config, std::ostream& out, int threads,
               const std::atomic<bool>* stop = nullptr);

/// NESTED_ALLOC_THREADS when set and positive, else the hardware count.
int bench_threads();

}  // namespace nested

#endif  // NESTED_BENCH_HPP
