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

#include "nested/solver.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nested/rap.hpp"
#include "nested/verify.hpp"

namespace nested {
namespace {

using Clock = std::chrono::steady_clock;

template <typename Scalar>
Vector<Scalar> as(const VectorXd& v) {
  return v.template cast<Scalar>();
}

template <typename Scalar>
Scalar as(double v) {
  return static_cast<Scalar>(v);
}

template <typename Scalar>
Scalar block_sum(const Vector<Scalar>& v, const NestedInstance& inst, Index block) {
  const Index begin = inst.breakpoint(block - 1);
  return v.segment(begin, inst.breakpoint(block) - begin).sum();
}

// Comparison slack for sums of continuous data; integer data compares exactly.
template <typename Scalar>
Scalar sum_slack(Scalar scale) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return 1e-12 * std::max<Scalar>(Scalar(1), std::abs(scale));
  } else {
    return Scalar(0);
  }
}

// Node [v, w] of the balanced split, with its depth (root = 0).
struct Node {
  Index v;
  Index w;
  int depth;
};

// Breadth-first listing; reversing it visits children before parents.
std::vector<Node> split_tree(Index m) {
  std::vector<Node> nodes;
  nodes.reserve(static_cast<size_t>(2 * m - 1));
  nodes.push_back({1, m, 0});
  for (size_t head = 0; head < nodes.size(); ++head) {
    const Node node = nodes[head];
    if (node.v == node.w) continue;
    const Index t = (node.v + node.w) / 2;
    nodes.push_back({node.v, t, node.depth + 1});
    nodes.push_back({t + 1, node.w, node.depth + 1});
  }
  return nodes;
}

Vector<double> run_rap(const RapProblem<double>& problem, double eps) {
  return rap_continuous(problem, eps);
}

Vector<std::int64_t> run_rap(const RapProblem<std::int64_t>& problem, double) {
  return rap_integer(problem);
}

// `children` holds the node's segment [begin, end) before the merge.
template <typename Scalar>
void check_bracketing(const Vector<Scalar>& merged, const Vector<Scalar>& children, Index begin,
                      Index split, Index end) {
  for (Index i = begin; i < end; ++i) {
    const Scalar before = children[i - begin];
    const bool ok = i < split ? merged[i] <= before : merged[i] >= before;
    if (!ok) {
      throw std::logic_error("merge broke child bracketing at variable " + std::to_string(i));
    }
  }
}

// Prefix sums sitting on their tightened bound, j < m.
template <typename Scalar>
long count_tight(const NestedInstance& inst, const Vector<Scalar>& x, const Vector<Scalar>& abar,
                 double tau) {
  long tight = 0;
  Scalar y(0);
  for (Index j = 1; j < inst.m; ++j) {
    const Index begin = inst.breakpoint(j - 1);
    y += x.segment(begin, inst.breakpoint(j) - begin).sum();
    if (static_cast<double>(abar[j] - y) <= tau) ++tight;
  }
  return tight;
}

template <typename Scalar>
SolveResult solve_impl(const NestedInstance& inst, const SolveOptions& options) {
  const auto started = Clock::now();
  SolveResult result;
  Solution& sol = result.solution;
  SolveStats& stats = result.stats;
  sol.epsilon = inst.mode == Mode::kContinuous ? options.epsilon : 0.0;

  WorkingBounds<Scalar> wb = tighten<Scalar>(inst);
  if (!check_feasible(inst, wb)) {
    sol.status = Status::kInfeasible;
    stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return result;
  }

  const Vector<Scalar> box_lower = as<Scalar>(inst.lower);
  const Vector<Scalar> box_upper = as<Scalar>(inst.upper);
  const double eps_sub = subproblem_epsilon(options.epsilon, inst.m);
  Vector<Scalar> x(inst.n);
  Vector<Scalar> children;  // node segment before the merge, for invariant checks

  const std::vector<Node> nodes = split_tree(inst.m);
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    if (options.deadline && Clock::now() > *options.deadline) {
      sol.status = Status::kTimeout;
      stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
      return result;
    }
    const Index begin = inst.breakpoint(it->v - 1);
    const Index end = inst.breakpoint(it->w);
    const Index len = end - begin;
    Index split = end;
    if (it->v != it->w) {
      // Left children may only shrink, right children may only grow.
      split = inst.breakpoint((it->v + it->w) / 2);
      const Index left = split - begin;
      wb.lower.segment(begin, left) = box_lower.segment(begin, left);
      wb.upper.segment(begin, left) = x.segment(begin, left);
      wb.lower.segment(split, end - split) = x.segment(split, end - split);
      wb.upper.segment(split, end - split) = box_upper.segment(split, end - split);
      if (options.check_invariants) children = x.segment(begin, len);
    }
    const RapProblem<Scalar> problem{inst.objective, begin, wb.lower.segment(begin, len),
                                     wb.upper.segment(begin, len),
                                     wb.abar[it->w] - wb.abar[it->v - 1]};
    x.segment(begin, len) = run_rap(problem, eps_sub);
    ++stats.rap_calls;
    stats.recursion_levels = std::max(stats.recursion_levels, it->depth + 1);
    if (options.check_invariants && it->v != it->w) {
      check_bracketing<Scalar>(x, children, begin, split, end);
    }
  }

  sol.x = x.template cast<double>();
  sol.status = Status::kOptimal;
  sol.objective = inst.cost(sol.x);
  stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  stats.active_constraints = count_tight(inst, x, wb.abar, activity_tolerance(inst, sol.epsilon));
  return result;
}

}  // namespace

int recursion_levels(Index m) {
  int levels = 1;
  for (Index span = 1; span < m; span *= 2) ++levels;
  return levels;
}

double subproblem_epsilon(double eps, Index m) { return eps / recursion_levels(m); }

template <typename Scalar>
WorkingBounds<Scalar> tighten(const NestedInstance& inst) {
  WorkingBounds<Scalar> wb;
  wb.lower = as<Scalar>(inst.lower);
  wb.upper = as<Scalar>(inst.upper);
  wb.abar.resize(inst.m + 1);
  wb.abar[0] = Scalar(0);
  wb.abar[inst.m] = as<Scalar>(inst.B);
  for (Index j = 1; j < inst.m; ++j) {
    wb.abar[j] = std::min<Scalar>(wb.abar[j - 1] + block_sum(wb.upper, inst, j),
                                  as<Scalar>(inst.a[j - 1]));
  }
  for (Index j = inst.m - 1; j >= 1; --j) {
    wb.abar[j] = std::min<Scalar>(wb.abar[j], wb.abar[j + 1] - block_sum(wb.lower, inst, j + 1));
  }
  return wb;
}

template <typename Scalar>
bool check_feasible(const NestedInstance& inst, const WorkingBounds<Scalar>& wb) {
  Scalar suffix_upper(0);
  for (Index j = inst.m; j >= 1; --j) {
    suffix_upper += block_sum(wb.upper, inst, j);
    const Scalar tol = sum_slack<Scalar>(wb.abar[inst.m]);
    if (suffix_upper + tol < wb.abar[inst.m] - wb.abar[j - 1]) return false;
    if (wb.abar[j] - wb.abar[j - 1] + tol < block_sum(wb.lower, inst, j)) return false;
  }
  return true;
}

template <typename Scalar>
Vector<Scalar> block_feasible_point(const NestedInstance& inst, const WorkingBounds<Scalar>& wb,
                                     Index block) {
  const Index begin = inst.breakpoint(block - 1);
  const Index len = inst.breakpoint(block) - begin;
  Vector<Scalar> x = wb.lower.segment(begin, len);
  Scalar remaining = wb.abar[block] - wb.abar[block - 1] - x.sum();
  for (Index j = 0; j < len; ++j) {
    const Scalar take = std::max<Scalar>(
        Scalar(0), std::min<Scalar>(wb.upper[begin + j] - x[j], remaining));
    x[j] += take;
    remaining -= take;
  }
  return x;
}

SolveResult solve(const NestedInstance& inst, const SolveOptions& options) {
  inst.validate();
  if (inst.mode == Mode::kInteger) return solve_impl<std::int64_t>(inst, options);
  if (!(options.epsilon > 0.0)) {
    throw std::invalid_argument("continuous solve requires epsilon > 0");
  }
  return solve_impl<double>(inst, options);
}

template WorkingBounds<double> tighten<double>(const NestedInstance&);
template WorkingBounds<std::int64_t> tighten<std::int64_t>(const NestedInstance&);
template bool check_feasible<double>(const NestedInstance&, const WorkingBounds<double>&);
template bool check_feasible<std::int64_t>(const NestedInstance&,
                                           const WorkingBounds<std::int64_t>&);
template Vector<double> block_feasible_point<double>(const NestedInstance&,
                                                      const WorkingBounds<double>&, Index);
template Vector<std::int64_t> block_feasible_point<std::int64_t>(
    const NestedInstance&, const WorkingBounds<std::int64_t>&, Index);

}  // namespace nested
