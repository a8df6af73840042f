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

#ifndef NESTED_RAP_HPP
#define NESTED_RAP_HPP

#include <cstdint>

#include "nested/objective.hpp"
#include "nested/types.hpp"

namespace nested {

/// Box-constrained single-equality subproblem
///
///   min sum_j f_{offset+j}(x_j)  s.t.  sum_j x_j = target,  lower <= x <= upper.
///
/// `offset` maps local variable j to the objective's global index.
template <typename Scalar>
struct RapProblem {
  const Objective& objective;
  Index offset;
  Eigen::Ref<const Vector<Scalar>> lower;
  Eigen::Ref<const Vector<Scalar>> upper;
  Scalar target;

  Index size() const { return lower.size(); }
};

/// Multiplier interval with the total allocations at its endpoints.
struct LambdaBracket {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  double sum_lo = 0.0;
  double sum_hi = 0.0;
};

/// Starting bracket [min_j f'_j(lower_j), max_j f'_j(upper_j)] over the
/// non-fixed variables; the sums are those of `lower` and `upper`.
LambdaBracket initial_bracket(const RapProblem<double>& problem);

/// Lagrangian bisection. Stops once every coordinate of the clamped
/// inverse-derivative allocation is pinned to within `eps` by the bracket,
/// then fills the remaining resource in index order so the sum hits the
/// target. `iterations`, when given, receives the number of bisection steps.
VectorXd rap_continuous(const RapProblem<double>& problem, double eps,
                        int* iterations = nullptr);

/// Exact integer optimum by multiplier search over marginal costs
/// f(t) - f(t - 1). Ties at the critical marginal go to the lowest index.
VectorXi64 rap_integer(const RapProblem<std::int64_t>& problem);

/// Unit-increment greedy with a binary heap; O((target - sum lower) log n).
/// Same tie rule as rap_integer, so the allocations coincide.
VectorXi64 rap_integer_greedy(const RapProblem<std::int64_t>& problem);

/// Adjacent-representable-double aware midpoint of [lo, hi]: halves the count
/// of doubles in the interval, so at most 64 halvings exhaust any bracket.
double ordered_midpoint(double lo, double hi);

}  // namespace nested

#endif  // NESTED_RAP_HPP
