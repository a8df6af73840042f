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

#include "nested/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nested {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double roundoff(double scale) { return 1e-12 * std::max(1.0, std::abs(scale)); }

// Allowed derivative error at x_j when x_j may be off by tau.
double derivative_allowance(const NestedInstance& inst, Index j, double xj, double tau,
                            double gj) {
  const double lo = inst.lower[j];
  const double hi = inst.upper[j];
  double curvature = 0.0;
  for (double probe : {xj - tau, xj, xj + tau}) {
    const double at = std::min(std::max(probe, lo), hi);
    curvature = std::max(curvature, std::abs(inst.objective.second_derivative(j, at)));
  }
  return 10.0 * tau * curvature + 1e-9 * (1.0 + std::abs(gj));
}

}  // namespace

FeasibilityReport check_solution_feasibility(const NestedInstance& inst, const VectorXd& x,
                                             double tau) {
  FeasibilityReport report;
  if (x.size() != inst.n) throw std::invalid_argument("solution has wrong dimension");
  report.prefix_slacks.resize(inst.m - 1);
  bool ok = true;
  for (Index i = 0; i < inst.n; ++i) {
    const double below = inst.lower[i] - x[i];
    const double above = x[i] - inst.upper[i];
    report.max_box_violation = std::max({report.max_box_violation, below, above});
  }
  ok = ok && report.max_box_violation <= tau + roundoff(inst.upper.cwiseAbs().maxCoeff());

  double y = 0.0;
  Index j = 0;
  for (Index i = 0; i < inst.n; ++i) {
    y += x[i];
    if (j < inst.m - 1 && i + 1 == inst.s[static_cast<size_t>(j)]) {
      const double slack = inst.a[j] - y;
      report.prefix_slacks[j] = slack;
      const double allowed = static_cast<double>(i + 1) * tau + roundoff(inst.a[j]);
      ok = ok && slack >= -allowed;
      ++j;
    }
  }
  report.sum_error = y - inst.B;
  ok = ok && std::abs(report.sum_error) <= static_cast<double>(inst.n) * tau + roundoff(inst.B) +
                                               1e-15 * static_cast<double>(inst.n) * inst.B;
  report.feasible = ok;
  return report;
}

KktReport verify_kkt(const NestedInstance& inst, const Solution& sol, double tau) {
  if (!inst.objective.has_derivative()) {
    throw std::logic_error("verify_kkt needs an objective with a derivative");
  }
  KktReport report;
  const FeasibilityReport feas = check_solution_feasibility(inst, sol.x, tau);
  report.feasible = feas.feasible;
  report.prefix_slacks = feas.prefix_slacks;

  // Level interval [lo, hi] per block.
  std::vector<double> level_lo(static_cast<size_t>(inst.m), -kInf);
  std::vector<double> level_hi(static_cast<size_t>(inst.m), kInf);
  for (Index b = 1; b <= inst.m; ++b) {
    double free_min = kInf;
    double free_max = -kInf;
    double& lo = level_lo[static_cast<size_t>(b - 1)];
    double& hi = level_hi[static_cast<size_t>(b - 1)];
    for (Index i = inst.breakpoint(b - 1); i < inst.breakpoint(b); ++i) {
      const double xi = std::min(std::max(sol.x[i], inst.lower[i]), inst.upper[i]);
      const bool at_lower = xi - inst.lower[i] <= tau;
      const bool at_upper = inst.upper[i] - xi <= tau;
      if (at_lower && at_upper) continue;
      const double g = inst.objective.derivative(i, xi);
      const double u = derivative_allowance(inst, i, xi, tau, g);
      if (!at_lower) lo = std::max(lo, g - u);  // free or at upper: g <= level + u
      if (!at_upper) hi = std::min(hi, g + u);  // free or at lower: g >= level - u
      if (!at_lower && !at_upper) {
        free_min = std::min(free_min, g);
        free_max = std::max(free_max, g);
      }
    }
    if (free_max >= free_min) {
      report.max_within_block_gap = std::max(report.max_within_block_gap, free_max - free_min);
    }
    if (lo > hi) report.within_block_violations.push_back(b);
  }

  // Chain the blocks: inactive boundaries force equal levels, active ones
  // allow an increase. Levels are chosen as low as possible.
  double group_lo = level_lo[0];
  double group_hi = level_hi[0];
  double previous_level = -kInf;
  for (Index b = 1; b < inst.m; ++b) {
    const double allowed = static_cast<double>(inst.breakpoint(b)) * tau + roundoff(inst.a[b - 1]);
    const bool tight = feas.prefix_slacks[b - 1] <= allowed;
    const double next_lo = level_lo[static_cast<size_t>(b)];
    const double next_hi = level_hi[static_cast<size_t>(b)];
    if (tight) {
      previous_level = std::max(previous_level, group_lo);
      group_lo = next_lo;
      group_hi = next_hi;
      if (std::max(previous_level, group_lo) > group_hi) {
        report.boundary_violations.push_back(inst.breakpoint(b));
      }
    } else {
      group_lo = std::max(group_lo, next_lo);
      group_hi = std::min(group_hi, next_hi);
      if (std::max(previous_level, group_lo) > group_hi) {
        report.boundary_violations.push_back(inst.breakpoint(b));
        // Restart from the next block so later boundaries are judged locally.
        group_lo = next_lo;
        group_hi = next_hi;
      }
    }
  }

  report.verdict = report.feasible && report.within_block_violations.empty() &&
                   report.boundary_violations.empty();
  return report;
}

ExchangeReport verify_integer(const NestedInstance& inst, const Solution& sol, double tol) {
  ExchangeReport report;
  const FeasibilityReport feas = check_solution_feasibility(inst, sol.x, 0.0);
  report.feasible = feas.feasible;
  if (!report.feasible) return report;

  const Index n = inst.n;
  VectorXd up = VectorXd::Constant(n, kInf);  // cost of one more unit
  for (Index i = 0; i < n; ++i) {
    if (sol.x[i] < inst.upper[i]) {
      up[i] = inst.objective.value(i, sol.x[i] + 1.0) - inst.objective.value(i, sol.x[i]);
    }
  }
  // Cheapest receiver at or after i.
  std::vector<Index> suffix_best(static_cast<size_t>(n) + 1, -1);
  for (Index i = n - 1; i >= 0; --i) {
    const Index next = suffix_best[static_cast<size_t>(i + 1)];
    suffix_best[static_cast<size_t>(i)] = (next < 0 || up[i] <= up[next]) ? i : next;
  }

  const auto consider = [&](Index from, Index to, double saved) {
    if (to < 0 || up[to] == kInf) return;
    const double change = up[to] - saved;
    if (change < report.best_improvement) {
      report.best_improvement = change;
      report.from = from;
      report.to = to;
    }
  };

  // Moving a unit to an earlier variable raises the prefix sums between the
  // two, so receivers must lie after the last constraint with slack < 1.
  Index segment_best = -1;
  Index next_constraint = 0;
  for (Index from = 0; from < n; ++from) {
    while (next_constraint < inst.m - 1 && inst.s[static_cast<size_t>(next_constraint)] <= from) {
      if (feas.prefix_slacks[next_constraint] < 1.0) segment_best = -1;
      ++next_constraint;
    }
    if (sol.x[from] > inst.lower[from]) {
      const double saved =
          inst.objective.value(from, sol.x[from]) - inst.objective.value(from, sol.x[from] - 1.0);
      consider(from, segment_best, saved);
      consider(from, suffix_best[static_cast<size_t>(from + 1)], saved);
    }
    if (segment_best < 0 || up[from] < up[segment_best]) segment_best = from;
  }
  report.optimal = report.best_improvement >= -tol;
  return report;
}

long count_active(const NestedInstance& inst, const Solution& sol, double tau) {
  long active = 0;
  double y = 0.0;
  Index j = 0;
  for (Index i = 0; i < inst.n && j < inst.m - 1; ++i) {
    y += sol.x[i];
    if (i + 1 == inst.s[static_cast<size_t>(j)]) {
      if (inst.a[j] - y <= tau) ++active;
      ++j;
    }
  }
  return active;
}

double activity_tolerance(const NestedInstance& inst, double eps) {
  if (inst.mode == Mode::kInteger) return 0.0;
  return 1000.0 * eps * std::max(1.0, inst.B / static_cast<double>(inst.n));
}

}  // namespace nested
