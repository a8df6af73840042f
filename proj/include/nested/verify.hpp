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

#ifndef NESTED_VERIFY_HPP
#define NESTED_VERIFY_HPP

#include <vector>

#include "nested/instance.hpp"

namespace nested {

/// Primal feasibility of x with per-constraint slacks a_i - y_i (i < m).
struct FeasibilityReport {
  bool feasible = false;
  double sum_error = 0.0;          // sum x - B
  double max_box_violation = 0.0;  // max over i of distance outside [lower_i, upper_i]
  VectorXd prefix_slacks;          // m - 1 entries
};

/// `tau` bounds the coordinate error of x; prefix sums are allowed s[i] * tau,
/// the sum n * tau, plus round-off.
FeasibilityReport check_solution_feasibility(const NestedInstance& inst, const VectorXd& x,
                                             double tau);

/// First-order optimality report for a continuous solution.
///
/// Within a block every variable away from its box shares one derivative
/// level; a variable at its lower (upper) bound only needs a derivative at
/// least (at most) that level. Across boundary j = s[i] the level may only
/// increase, and only when constraint i is tight.
struct KktReport {
  double max_within_block_gap = 0.0;  // max - min derivative among free variables of a block
  std::vector<Index> within_block_violations;  // 1-based blocks with no consistent level
  std::vector<Index> boundary_violations;      // boundary variables j = s[i], 1-based
  VectorXd prefix_slacks;
  bool feasible = false;
  bool verdict = false;
};

/// `tau` is the claimed max-norm accuracy of x. Derivative comparisons use a
/// per-variable allowance 10 * tau * max |f''| over [x_j - tau, x_j + tau]
/// plus relative round-off. Throws std::logic_error for objectives without a
/// derivative.
KktReport verify_kkt(const NestedInstance& inst, const Solution& sol, double tau);

/// Integer optimality by unit exchanges: no feasible move of one unit from
/// x_j to x_k lowers the cost by more than `tol`.
struct ExchangeReport {
  bool feasible = false;
  bool optimal = false;
  double best_improvement = 0.0;  // most negative cost change found (<= 0)
  Index from = -1;
  Index to = -1;
};

ExchangeReport verify_integer(const NestedInstance& inst, const Solution& sol, double tol = 1e-9);

/// Number of i in 1..m-1 with a_i - y_i <= tau.
long count_active(const NestedInstance& inst, const Solution& sol, double tau);

/// Tolerance used to call a nested constraint tight: 0 for integer solutions,
/// otherwise 1000 * eps scaled by max(1, B / n).
double activity_tolerance(const NestedInstance& inst, double eps);

}  // namespace nested

#endif  // NESTED_VERIFY_HPP
