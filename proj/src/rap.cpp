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

#include "nested/rap.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace nested {
namespace {

// Monotone map from doubles to signed integers (both zeros map to 0).
std::int64_t order_key(double v) {
  const auto bits = std::bit_cast<std::int64_t>(v);
  return bits >= 0 ? bits : -(bits & std::numeric_limits<std::int64_t>::max());
}

double from_order_key(std::int64_t key) {
  if (key >= 0) return std::bit_cast<double>(key);
  return std::bit_cast<double>((-key) | std::numeric_limits<std::int64_t>::min());
}

double feasibility_slack(double target, double sum_lo, double sum_hi) {
  return 1e-9 * std::max({1.0, std::abs(target), std::abs(sum_lo), std::abs(sum_hi)});
}

// Marginal cost of the t-th unit of variable g: f_g(t) - f_g(t - 1).
double marginal(const Objective& f, Index g, std::int64_t t) {
  return f.value(g, static_cast<double>(t)) - f.value(g, static_cast<double>(t - 1));
}

void check_integer_feasible(const RapProblem<std::int64_t>& p) {
  if ((p.lower.array() > p.upper.array()).any()) {
    throw InfeasibleError("RAP bounds cross");
  }
  const std::int64_t lo = p.lower.sum();
  const std::int64_t hi = p.upper.sum();
  if (p.target < lo || p.target > hi) {
    throw InfeasibleError("RAP target " + std::to_string(p.target) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// Largest t in [lo, hi] with marginal(t) <= lambda (strict: < lambda).
std::int64_t units_at(const Objective& f, Index g, std::int64_t lo, std::int64_t hi,
                      double lambda, bool strict) {
  std::int64_t left = lo;  // invariant: left is admissible
  std::int64_t right = hi;
  while (left < right) {
    const std::int64_t mid = left + (right - left + 1) / 2;
    const double d = marginal(f, g, mid);
    if (strict ? d < lambda : d <= lambda) {
      left = mid;
    } else {
      right = mid - 1;
    }
  }
  return left;
}

}  // namespace

double ordered_midpoint(double lo, double hi) {
  const std::int64_t a = order_key(lo);
  const std::int64_t b = order_key(hi);
  // Difference fits: keys span at most 2^64 - 2^53 * 2.
  const auto span = static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a);
  return from_order_key(a + static_cast<std::int64_t>(span / 2));
}

LambdaBracket initial_bracket(const RapProblem<double>& p) {
  LambdaBracket br;
  br.lambda_lo = std::numeric_limits<double>::infinity();
  br.lambda_hi = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < p.size(); ++j) {
    if (p.lower[j] >= p.upper[j]) continue;
    br.lambda_lo = std::min(br.lambda_lo, p.objective.derivative(p.offset + j, p.lower[j]));
    br.lambda_hi = std::max(br.lambda_hi, p.objective.derivative(p.offset + j, p.upper[j]));
  }
  br.sum_lo = p.lower.sum();
  br.sum_hi = p.upper.sum();
  return br;
}

VectorXd rap_continuous(const RapProblem<double>& p, double eps, int* iterations) {
  if (!(eps > 0.0)) throw std::invalid_argument("rap_continuous: eps must be positive");
  if (!p.objective.has_derivative()) {
    throw std::logic_error("rap_continuous: objective has no derivative");
  }
  if (iterations != nullptr) *iterations = 0;
  const Index k = p.size();
  const double target = p.target;
  const LambdaBracket start = initial_bracket(p);
  const double slack = feasibility_slack(target, start.sum_lo, start.sum_hi);
  if ((p.lower.array() > p.upper.array()).any() || target < start.sum_lo - slack ||
      target > start.sum_hi + slack) {
    throw InfeasibleError("RAP target " + std::to_string(target) + " outside [" +
                          std::to_string(start.sum_lo) + ", " + std::to_string(start.sum_hi) + "]");
  }
  if (target <= start.sum_lo) return p.lower;
  if (target >= start.sum_hi) return p.upper;

  VectorXd x_lo = p.lower;
  VectorXd x_hi = p.upper;
  VectorXd x_mid(k);
  double lam_lo = start.lambda_lo;
  double lam_hi = start.lambda_hi;
  double sum_lo = start.sum_lo;
  double width = (x_hi - x_lo).maxCoeff();

  // The bracket endpoints themselves are never evaluated: x(lam_lo) is taken
  // as `lower` and x(lam_hi) as `upper`, which brackets the optimum for any
  // strictly smaller / larger multiplier.
  while (width > eps && lam_lo < lam_hi) {
    const double lam = ordered_midpoint(lam_lo, lam_hi);
    if (lam <= lam_lo || lam >= lam_hi) break;
    double sum = 0.0;
    double width_if_lo = 0.0;  // width if lam becomes the new lower end
    double width_if_hi = 0.0;
    for (Index j = 0; j < k; ++j) {
      double v = p.objective.inverse_derivative(p.offset + j, lam, p.lower[j], p.upper[j]);
      v = std::min(std::max(v, x_lo[j]), x_hi[j]);
      x_mid[j] = v;
      sum += v;
      width_if_lo = std::max(width_if_lo, x_hi[j] - v);
      width_if_hi = std::max(width_if_hi, v - x_lo[j]);
    }
    if (iterations != nullptr) ++*iterations;
    if (sum == target) return x_mid;
    if (sum < target) {
      x_lo.swap(x_mid);
      lam_lo = lam;
      sum_lo = sum;
      width = width_if_lo;
    } else {
      x_hi.swap(x_mid);
      lam_hi = lam;
      width = width_if_hi;
    }
  }

  // Index-order fill of the residual between the bracketing allocations.
  double residual = target - sum_lo;
  for (Index j = 0; j < k && residual > 0.0; ++j) {
    const double gap = x_hi[j] - x_lo[j];
    if (gap <= residual) {
      x_lo[j] = x_hi[j];
      residual -= gap;
    } else {
      x_lo[j] += residual;
      residual = 0.0;
    }
  }
  return x_lo;
}

VectorXi64 rap_integer(const RapProblem<std::int64_t>& p) {
  check_integer_feasible(p);
  const Index k = p.size();
  const std::int64_t base = p.lower.sum();
  if (p.target == base) return p.lower;
  if (p.target == p.upper.sum()) return p.upper;

  // Smallest first marginal and largest last marginal over the free variables.
  double lam_lo = std::numeric_limits<double>::infinity();
  double lam_hi = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < k; ++j) {
    if (p.lower[j] >= p.upper[j]) continue;
    lam_lo = std::min(lam_lo, marginal(p.objective, p.offset + j, p.lower[j] + 1));
    lam_hi = std::max(lam_hi, marginal(p.objective, p.offset + j, p.upper[j]));
  }
  // Every marginal is > lam_lo, so x(lam_lo) = lower and the sum is short.
  lam_lo = std::nextafter(lam_lo, -std::numeric_limits<double>::infinity());

  const auto total_at = [&](double lambda) {
    std::int64_t total = 0;
    for (Index j = 0; j < k; ++j) {
      total += units_at(p.objective, p.offset + j, p.lower[j], p.upper[j], lambda, false);
    }
    return total;
  };

  // Invariant: total_at(lam_lo) < target <= total_at(lam_hi).
  for (;;) {
    const double lam = ordered_midpoint(lam_lo, lam_hi);
    if (lam <= lam_lo || lam >= lam_hi) break;
    if (total_at(lam) >= p.target) {
      lam_hi = lam;
    } else {
      lam_lo = lam;
    }
  }

  // lam_hi is the critical marginal; x(lam_lo) takes every strictly cheaper
  // unit, the rest come from units priced exactly lam_hi, lowest index first.
  VectorXi64 x(k);
  VectorXi64 room(k);
  std::int64_t residual = p.target;
  for (Index j = 0; j < k; ++j) {
    const Index g = p.offset + j;
    x[j] = units_at(p.objective, g, p.lower[j], p.upper[j], lam_hi, true);
    room[j] = units_at(p.objective, g, x[j], p.upper[j], lam_hi, false) - x[j];
    residual -= x[j];
  }
  for (Index j = 0; j < k && residual > 0; ++j) {
    const std::int64_t take = std::min(room[j], residual);
    x[j] += take;
    residual -= take;
  }
  return x;
}

VectorXi64 rap_integer_greedy(const RapProblem<std::int64_t>& p) {
  check_integer_feasible(p);
  const Index k = p.size();
  VectorXi64 x = p.lower;
  using Entry = std::pair<double, Index>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (Index j = 0; j < k; ++j) {
    if (x[j] < p.upper[j]) heap.emplace(marginal(p.objective, p.offset + j, x[j] + 1), j);
  }
  for (std::int64_t remaining = p.target - p.lower.sum(); remaining > 0; --remaining) {
    const Index j = heap.top().second;
    heap.pop();
    ++x[j];
    if (x[j] < p.upper[j]) heap.emplace(marginal(p.objective, p.offset + j, x[j] + 1), j);
  }
  return x;
}

}  // namespace nested
