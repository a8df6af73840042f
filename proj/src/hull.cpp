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

#include "nested/hull.hpp"

#include <cmath>
#include <ostream>

#include "nested/generate.hpp"

namespace nested {
namespace {

constexpr double kTurnTolerance = 0x1.0p-40;

}  // namespace

HullInstance make_hull_instance(const VectorXd& gamma, const std::vector<Index>& s,
                                const VectorXd& a, double B) {
  const Index n = gamma.size();
  const auto m = static_cast<Index>(s.size());
  if (n == 0 || m == 0 || s.back() != n || a.size() != m - 1) {
    throw std::invalid_argument("hull instance: inconsistent sizes");
  }
  if (!(gamma.array() > 0.0).all() || !gamma.allFinite()) {
    throw NotEligibleError("hull instance: scale parameters must be positive");
  }
  HullInstance hull;
  hull.gamma = gamma;
  hull.s = s;
  hull.prefix.resize(n + 1);
  hull.prefix[0] = 0.0;
  for (Index i = 0; i < n; ++i) hull.prefix[i + 1] = hull.prefix[i] + gamma[i];
  hull.abscissa.resize(m + 1);
  hull.ordinate.resize(m + 1);
  hull.abscissa[0] = 0.0;
  hull.ordinate[0] = 0.0;
  for (Index j = 1; j <= m; ++j) {
    hull.abscissa[j] = hull.prefix[s[static_cast<size_t>(j - 1)]];
    hull.ordinate[j] = j == m ? B : a[j - 1];
  }
  return hull;
}

HullInstance make_hull_instance(const NestedInstance& inst) {
  const auto gamma = inst.objective.scale_parameters();
  if (!gamma) throw NotEligibleError("family not hull-eligible");
  return make_hull_instance(*gamma, inst.s, inst.a, inst.B);
}

template <typename Scalar>
std::vector<Index> lower_hull(const Vector<Scalar>& xs, const Vector<Scalar>& ys) {
  std::vector<Index> chain;
  chain.reserve(static_cast<size_t>(xs.size()));
  for (Index k = 0; k < xs.size(); ++k) {
    while (chain.size() >= 2) {
      const Index o = chain[chain.size() - 2];
      const Index p = chain.back();
      const double lhs = static_cast<double>(xs[p] - xs[o]) * static_cast<double>(ys[k] - ys[o]);
      const double rhs = static_cast<double>(ys[p] - ys[o]) * static_cast<double>(xs[k] - xs[o]);
      // Keep p only for a strict left turn o -> p -> k.
      if (lhs - rhs > kTurnTolerance * (std::abs(lhs) + std::abs(rhs))) break;
      chain.pop_back();
    }
    chain.push_back(k);
  }
  return chain;
}

template std::vector<Index> lower_hull<double>(const Vector<double>&, const Vector<double>&);
template std::vector<Index> lower_hull<std::int64_t>(const Vector<std::int64_t>&,
                                                     const Vector<std::int64_t>&);

HullResult hull_solve(const HullInstance& hull) {
  HullResult result;
  result.vertices = lower_hull<double>(hull.abscissa, hull.ordinate);
  result.active = static_cast<long>(result.vertices.size()) - 2;
  result.x.resize(hull.gamma.size());
  for (size_t v = 1; v < result.vertices.size(); ++v) {
    const Index from = result.vertices[v - 1];
    const Index to = result.vertices[v];
    const double slope = (hull.ordinate[to] - hull.ordinate[from]) /
                         (hull.abscissa[to] - hull.abscissa[from]);
    const Index begin = from == 0 ? 0 : hull.s[static_cast<size_t>(from - 1)];
    const Index end = hull.s[static_cast<size_t>(to - 1)];
    result.x.segment(begin, end - begin) = slope * hull.gamma.segment(begin, end - begin);
  }
  return result;
}

Solution hull_solve(const NestedInstance& inst, HullResult* details) {
  inst.validate();
  HullResult result = hull_solve(make_hull_instance(inst));
  const double tol = 1e-12 * std::max(1.0, inst.B);
  result.applicable = ((result.x - inst.upper).array() <= tol).all() &&
                      ((inst.lower - result.x).array() <= tol).all();
  Solution sol;
  sol.x = result.x;
  sol.status = result.applicable ? Status::kOptimal : Status::kInfeasible;
  if (result.applicable) sol.objective = inst.cost(sol.x);
  if (details != nullptr) *details = std::move(result);
  return sol;
}

NestedInstance lift_for_hull(const NestedInstance& inst, double floor) {
  NestedInstance lifted = inst;
  const Family family = inst.objective.family();
  const double lower = (family == Family::kCrashing || family == Family::kFuelOpt) ? floor : 0.0;
  lifted.lower = VectorXd::Constant(inst.n, lower);
  lifted.upper = VectorXd::Constant(inst.n, std::max(inst.B, lower));
  return lifted;
}

std::vector<GrowthRow> active_growth_experiment(GeneratorFamily family,
                                                const std::vector<Index>& n_list, int trials,
                                                std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::vector<GrowthRow> rows;
  for (Index n : n_list) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
      const NestedInstance inst =
          generate(family, n, n, seed + static_cast<std::uint64_t>(t), TotalPolicy::kAsDrawn);
      const auto active = static_cast<double>(hull_solve(make_hull_instance(inst)).active);
      sum += active;
      sum_sq += active * active;
    }
    GrowthRow row;
    row.m = n;
    row.trials = trials;
    row.mean_active = sum / trials;
    row.std_active =
        trials > 1 ? std::sqrt(std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1))) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

void write_growth_csv(std::ostream& out, const std::vector<GrowthRow>& rows) {
  out << "m,trials,mean_active,std_active\n";
  for (const GrowthRow& row : rows) {
    out << row.m << ',' << row.trials << ',' << row.mean_active << ',' << row.std_active << '\n';
  }
}

}  // namespace nested
