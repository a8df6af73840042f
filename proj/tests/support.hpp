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

#ifndef NESTED_TESTS_SUPPORT_HPP
#define NESTED_TESTS_SUPPORT_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "nested/instance.hpp"
#include "nested/rng.hpp"

namespace nested::testing {

inline VectorXd vec(std::initializer_list<double> values) {
  VectorXd v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

// w_i (x - t_i)^2 with w = 1, t = 0.
inline Objective squares(Index n) {
  return Objective::quadratic(VectorXd::Ones(n), VectorXd::Zero(n));
}

inline NestedInstance make_instance(std::vector<Index> s, VectorXd a, double B, VectorXd lower,
                                    VectorXd upper, Objective objective,
                                    Mode mode = Mode::kContinuous) {
  NestedInstance inst;
  inst.n = upper.size();
  inst.m = static_cast<Index>(s.size());
  inst.s = std::move(s);
  inst.a = std::move(a);
  inst.B = B;
  inst.lower = std::move(lower);
  inst.upper = std::move(upper);
  inst.objective = std::move(objective);
  inst.mode = mode;
  return inst;
}

// n = 2, s = (1,2), a = (1), B = 4, d = (3,3), f = x^2. Optimum (1,3).
inline NestedInstance two_variable_example(Mode mode = Mode::kContinuous) {
  return make_instance({1, 2}, vec({1}), 4.0, VectorXd::Zero(2), vec({3, 3}), squares(2), mode);
}

// n = 4, m = 3, s = (2,3,4), d = (1,1,5,5), a = (5,7), B = 9.
inline NestedInstance tighten_example() {
  return make_instance({2, 3, 4}, vec({5, 7}), 9.0, VectorXd::Zero(4), vec({1, 1, 5, 5}),
                       squares(4));
}

// Small random quadratic instance with integer data, feasible by construction.
inline NestedInstance random_quadratic_integer(std::uint64_t seed, Index n, Index m) {
  Rng rng(seed);
  NestedInstance inst;
  inst.n = n;
  inst.m = m;
  inst.mode = Mode::kInteger;
  inst.s.clear();
  if (m == n) {
    for (Index i = 1; i <= n; ++i) inst.s.push_back(i);
  } else {
    for (auto v : rng.sample_sorted(n - 1, m - 1)) inst.s.push_back(static_cast<Index>(v));
    inst.s.push_back(n);
  }
  VectorXd w(n);
  VectorXd t(n);
  inst.lower = VectorXd::Zero(n);
  inst.upper.resize(n);
  VectorXd alpha(n);
  for (Index i = 0; i < n; ++i) {
    w[i] = static_cast<double>(rng.between(1, 4));
    t[i] = static_cast<double>(rng.between(-2, 4));
    inst.upper[i] = static_cast<double>(rng.between(1, 4));
    alpha[i] = static_cast<double>(rng.between(0, static_cast<std::int64_t>(inst.upper[i])));
  }
  inst.objective = Objective::quadratic(w, t);
  inst.a.resize(m - 1);
  double running = 0.0;
  Index j = 0;
  for (Index i = 0; i < n; ++i) {
    running += alpha[i];
    if (j < m - 1 && i + 1 == inst.s[static_cast<size_t>(j)]) inst.a[j++] = running;
  }
  inst.B = running;
  return inst;
}

// Same shape with continuous quadratic data.
inline NestedInstance random_quadratic(std::uint64_t seed, Index n, Index m) {
  Rng rng(seed);
  NestedInstance inst = random_quadratic_integer(seed, n, m);
  VectorXd w(n);
  VectorXd t(n);
  VectorXd alpha(n);
  for (Index i = 0; i < n; ++i) {
    w[i] = rng.uniform(0.5, 2.0);
    t[i] = rng.uniform(-1.0, 2.0);
    inst.upper[i] = rng.uniform(0.5, 2.0);
    alpha[i] = rng.uniform(0.0, inst.upper[i]);
  }
  inst.objective = Objective::quadratic(w, t);
  double running = 0.0;
  Index j = 0;
  for (Index i = 0; i < n; ++i) {
    running += alpha[i];
    if (j < m - 1 && i + 1 == inst.s[static_cast<size_t>(j)]) inst.a[j++] = running;
  }
  inst.B = running;
  inst.mode = Mode::kContinuous;
  return inst;
}

}  // namespace nested::testing

#endif  // NESTED_TESTS_SUPPORT_HPP
