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

#ifndef NESTED_SOLVER_HPP
#define NESTED_SOLVER_HPP

#include <chrono>
#include <optional>

#include "nested/instance.hpp"

namespace nested {

/// Tightened nested bounds:
///   abar_0 = 0, abar_m = B,
///   abar_j = min(abar_{j-1} + sum_{k in block j} upper_k, a_j)   (forward)
///   abar_j = min(abar_j, abar_{j+1} - sum_{k in block j+1} lower_k) (backward)
/// and per-variable working bounds initialised to the instance box. The
/// backward sweep only binds when a_{m-1} > B or with positive lower bounds.
template <typename Scalar>
WorkingBounds<Scalar> tighten(const NestedInstance& inst);

/// False iff some suffix cannot absorb its share, B - abar_{j-1} >
/// sum_{k > s[j-1]} upper_k, or some block cannot hold its lower bounds.
template <typename Scalar>
bool check_feasible(const NestedInstance& inst, const WorkingBounds<Scalar>& wb);

/// Feasible allocation of block v (1-based) at capacity abar_v - abar_{v-1},
/// filling lower-bound slack left to right.
template <typename Scalar>
Vector<Scalar> block_feasible_point(const NestedInstance& inst, const WorkingBounds<Scalar>& wb,
                                     Index block);

struct SolveOptions {
  /// Max-norm accuracy for continuous mode; ignored for integer instances.
  double epsilon = 1e-8;
  /// Cooperative cutoff, checked before every subproblem.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Re-check the child-solution bracketing at every merge (throws
  /// std::logic_error on violation). Defaults to on in debug builds.
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
};

struct SolveResult {
  Solution solution;
  SolveStats stats;
};

/// Decomposition solver: tighten, check feasibility, then solve the balanced
/// hierarchy of subproblems over blocks [v, w], children before parents, with
/// a single-equality box subproblem at every node. Dispatches on inst.mode.
SolveResult solve(const NestedInstance& inst, const SolveOptions& options = {});

/// 1 + ceil(log2 m).
int recursion_levels(Index m);

/// Per-subproblem accuracy used for an overall target eps.
double subproblem_epsilon(double eps, Index m);

}  // namespace nested

#endif  // NESTED_SOLVER_HPP
