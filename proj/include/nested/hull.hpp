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

#ifndef NESTED_HULL_HPP
#define NESTED_HULL_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "nested/instance.hpp"

namespace nested {

class NotEligibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scale-invariant instance f_i(x) = gamma_i h(x / gamma_i) without binding
/// boxes. The optimum follows from the lower convex hull of the points
/// (Gamma_{s[j]}, a_j), j = 0..m, where Gamma are prefix sums of gamma.
struct HullInstance {
  VectorXd gamma;          // n positive scales
  VectorXd prefix;         // n + 1 prefix sums, prefix[0] = 0
  std::vector<Index> s;    // breakpoints, as in NestedInstance
  VectorXd abscissa;       // m + 1 values Gamma_{s[j]}
  VectorXd ordinate;       // m + 1 values a_j, a_0 = 0, a_m = B
};

/// Builds the hull data. Throws NotEligibleError for objectives without a
/// scale form (F, CUSTOM, QUADRATIC with a nonzero target).
HullInstance make_hull_instance(const NestedInstance& inst);

/// Same, from raw scales and nested bounds (a has m - 1 entries).
HullInstance make_hull_instance(const VectorXd& gamma, const std::vector<Index>& s,
                                const VectorXd& a, double B);

/// Indices of the lower convex hull of points sorted by strictly increasing
/// abscissa, first and last always kept. Collinear interior points are
/// dropped; turns are compared with relative tolerance 2^-40 on the cross
/// product.
template <typename Scalar>
std::vector<Index> lower_hull(const Vector<Scalar>& xs, const Vector<Scalar>& ys);

struct HullResult {
  VectorXd x;
  std::vector<Index> vertices;  // indices j into the point set, including 0 and m
  long active = 0;              // vertices.size() - 2
  bool applicable = true;       // false when x leaves the instance box
};

/// x_i = gamma_i * slope of the hull segment covering variable i.
HullResult hull_solve(const HullInstance& hull);

/// Solves a NestedInstance through its hull and checks the result against the
/// box; Solution.status is OPTIMAL only when the hull answer is applicable.
Solution hull_solve(const NestedInstance& inst, HullResult* details = nullptr);

/// Copy of `inst` whose boxes cannot bind the hull solution: upper = B and
/// lower = `floor` (0 for objectives defined at zero).
NestedInstance lift_for_hull(const NestedInstance& inst, double floor = 1e-6);

struct GrowthRow {
  Index m = 0;
  int trials = 0;
  double mean_active = 0.0;
  double std_active = 0.0;
};

/// For every n in n_list (with m = n), hull-solves `trials` generated
/// instances with seeds seed, seed + 1, ... and reports the mean and sample
/// standard deviation of the number of interior hull vertices.
std::vector<GrowthRow> active_growth_experiment(GeneratorFamily family,
                                                const std::vector<Index>& n_list, int trials,
                                                std::uint64_t seed);

/// CSV with header m,trials,mean_active,std_active.
void write_growth_csv(std::ostream& out, const std::vector<GrowthRow>& rows);

}  // namespace nested

#endif  // NESTED_HULL_HPP
