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

#include "nested/oracles.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nested {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_integer(const NestedInstance& inst, const char* who) {
  inst.validate();
  if (inst.mode != Mode::kInteger) {
    throw std::invalid_argument(std::string(who) + " requires an integer-mode instance");
  }
}

Solution infeasible() {
  Solution sol;
  sol.status = Status::kInfeasible;
  return sol;
}

}  // namespace

Solution greedy_nested(const NestedInstance& inst) {
  require_integer(inst, "greedy_nested");
  const Index n = inst.n;
  VectorXd x = inst.lower;

  // slack[j] = a_{j+1} - y_{j+1} for the m - 1 nested constraints.
  std::vector<long long> slack(static_cast<size_t>(inst.m - 1));
  {
    double y = 0.0;
    Index j = 0;
    for (Index i = 0; i < n && j < inst.m - 1; ++i) {
      y += x[i];
      if (i + 1 == inst.s[static_cast<size_t>(j)]) {
        slack[static_cast<size_t>(j)] = static_cast<long long>(inst.a[j] - y);
        ++j;
      }
    }
  }
  if (std::any_of(slack.begin(), slack.end(), [](long long v) { return v < 0; })) {
    return infeasible();
  }
  auto remaining = static_cast<long long>(inst.B - x.sum());
  if (remaining < 0) return infeasible();

  const auto next_cost = [&](Index i) {
    return inst.objective.value(i, x[i] + 1.0) - inst.objective.value(i, x[i]);
  };
  using Entry = std::pair<double, Index>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> candidates;
  for (Index i = 0; i < n; ++i) {
    if (x[i] < inst.upper[i]) candidates.emplace(next_cost(i), i);
  }

  while (remaining > 0 && !candidates.empty()) {
    const Index i = candidates.top().second;
    candidates.pop();
    // Constraints j >= block(i) contain x_i.
    const auto first = static_cast<size_t>(inst.block_of(i) - 1);
    const bool fits =
        std::all_of(slack.begin() + static_cast<std::ptrdiff_t>(std::min(first, slack.size())),
                    slack.end(), [](long long v) { return v >= 1; });
    if (!fits) continue;
    x[i] += 1.0;
    --remaining;
    for (size_t j = first; j < slack.size(); ++j) --slack[j];
    if (x[i] < inst.upper[i]) candidates.emplace(next_cost(i), i);
  }
  if (remaining > 0) return infeasible();

  Solution sol;
  sol.x = std::move(x);
  sol.status = Status::kOptimal;
  sol.objective = inst.cost(sol.x);
  return sol;
}

Solution brute_force_integer(const NestedInstance& inst) {
  require_integer(inst, "brute_force_integer");
  if (inst.n > 12 || inst.B > 40) {
    throw std::length_error("brute_force_integer is limited to n <= 12 and B <= 40");
  }
  const Index n = inst.n;
  const auto total = static_cast<Index>(inst.B);

  // Prefix cap after each variable: a_j at breakpoints j < m, B elsewhere.
  std::vector<Index> cap(static_cast<size_t>(n), total);
  for (Index j = 0; j < inst.m - 1; ++j) {
    const auto limit = static_cast<Index>(std::min(inst.a[j], inst.B));
    cap[static_cast<size_t>(inst.s[static_cast<size_t>(j)] - 1)] = limit;
  }

  // best[i][y]: min cost of x_i..x_{n-1} given prefix sum y before x_i.
  std::vector<std::vector<double>> best(static_cast<size_t>(n) + 1,
                                        std::vector<double>(static_cast<size_t>(total) + 1, kInf));
  best[static_cast<size_t>(n)][static_cast<size_t>(total)] = 0.0;
  for (Index i = n - 1; i >= 0; --i) {
    const auto lo = static_cast<Index>(inst.lower[i]);
    const auto hi = static_cast<Index>(inst.upper[i]);
    for (Index y = 0; y <= total; ++y) {
      double value = kInf;
      for (Index t = lo; t <= hi && y + t <= cap[static_cast<size_t>(i)]; ++t) {
        const double rest = best[static_cast<size_t>(i + 1)][static_cast<size_t>(y + t)];
        if (rest == kInf) continue;
        value = std::min(value, inst.objective.value(i, static_cast<double>(t)) + rest);
      }
      best[static_cast<size_t>(i)][static_cast<size_t>(y)] = value;
    }
  }
  if (best[0][0] == kInf) return infeasible();

  Solution sol;
  sol.x.resize(n);
  Index y = 0;
  for (Index i = 0; i < n; ++i) {
    const double target = best[static_cast<size_t>(i)][static_cast<size_t>(y)];
    for (auto t = static_cast<Index>(inst.lower[i]);; ++t) {
      const double rest = best[static_cast<size_t>(i + 1)][static_cast<size_t>(y + t)];
      if (rest != kInf && inst.objective.value(i, static_cast<double>(t)) + rest == target) {
        sol.x[i] = static_cast<double>(t);
        y += t;
        break;
      }
    }
  }
  sol.status = Status::kOptimal;
  sol.objective = inst.cost(sol.x);
  return sol;
}

}  // namespace nested
