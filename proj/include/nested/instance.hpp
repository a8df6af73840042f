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

#ifndef NESTED_INSTANCE_HPP
#define NESTED_INSTANCE_HPP

#include <vector>

#include "nested/objective.hpp"
#include "nested/types.hpp"

namespace nested {

/// Resource allocation with nested ascending constraints:
///
///   min   sum_i f_i(x_i)
///   s.t.  sum_{k <= s[j]} x_k <= a_j        j = 1..m-1
///         sum_k x_k = B
///         lower_i <= x_i <= upper_i
///
/// Breakpoints are stored 1-based as in the model (s[m] = n); variables and the
/// Eigen arrays are 0-based.
struct NestedInstance {
  Index n = 0;
  Index m = 0;
  std::vector<Index> s;  // m strictly increasing breakpoints, s.back() == n
  VectorXd a;            // m - 1 nested bounds
  double B = 0.0;
  VectorXd lower;
  VectorXd upper;
  Objective objective = Objective::f(VectorXd());
  Mode mode = Mode::kContinuous;

  /// Throws ValidationError naming the offending field.
  void validate() const;

  /// s[j] with the convention s[0] = 0; j in 0..m.
  Index breakpoint(Index j) const { return j == 0 ? 0 : s[static_cast<size_t>(j - 1)]; }

  /// a_j with the conventions a_0 = 0 and a_m = B; j in 0..m.
  double bound(Index j) const { return j == 0 ? 0.0 : (j == m ? B : a[j - 1]); }

  /// 1-based block containing 0-based variable i.
  Index block_of(Index i) const;

  bool has_integer_data() const;

  /// sum_i f_i(x_i), summed in index order.
  double cost(const VectorXd& x) const;
};

struct Solution {
  VectorXd x;
  double objective = 0.0;
  Status status = Status::kInfeasible;
  double epsilon = 0.0;  // accuracy requested; 0 for integer solves
};

struct SolveStats {
  long rap_calls = 0;
  // recursion depth, root level included
  int recursion_levels = 0;
  long active_constraints = 0;  // j < m with y_j on its tightened bound abar_j
  double wall_ms = 0.0;
};

/// Per-variable bounds and tightened nested bounds shared across recursion
/// levels. abar has m + 1 entries with abar[0] = 0 and abar[m] = B.
template <typename Scalar>
struct WorkingBounds {
  Vector<Scalar> lower;
  Vector<Scalar> upper;
  Vector<Scalar> abar;
};

}  // namespace nested

#endif  // NESTED_INSTANCE_HPP
