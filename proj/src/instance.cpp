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

#include "nested/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nested {
namespace {

bool all_finite(const VectorXd& v) { return v.allFinite(); }

bool is_integral(double v) { return std::isfinite(v) && v == std::floor(v); }

bool all_integral(const VectorXd& v) {
  return std::all_of(v.data(), v.data() + v.size(), is_integral);
}

}  // namespace

void NestedInstance::validate() const {
  if (n < 1) throw ValidationError("n", "must be at least 1");
  if (m < 1 || m > n) throw ValidationError("m", "must satisfy 1 <= m <= n");
  if (static_cast<Index>(s.size()) != m) {
    throw ValidationError("s", "expected m = " + std::to_string(m) + " breakpoints");
  }
  Index previous = 0;
  for (Index v : s) {
    if (v <= previous) throw ValidationError("s", "breakpoints must be strictly increasing and >= 1");
    previous = v;
  }
  if (s.back() != n) throw ValidationError("s", "last breakpoint must equal n");

  if (a.size() != m - 1) {
    throw ValidationError("a", "expected m - 1 = " + std::to_string(m - 1) + " entries");
  }
  if (!all_finite(a) || (a.array() < 0.0).any()) {
    throw ValidationError("a", "entries must be finite and non-negative");
  }
  for (Index j = 1; j < a.size(); ++j) {
    if (a[j] < a[j - 1]) throw ValidationError("a", "must be nondecreasing");
  }
  if (!std::isfinite(B) || B < 0.0) throw ValidationError("B", "must be finite and non-negative");

  if (lower.size() != n) throw ValidationError("lower", "expected n entries");
  if (upper.size() != n) throw ValidationError("upper", "expected n entries");
  if (!all_finite(lower) || (lower.array() < 0.0).any()) {
    throw ValidationError("lower", "entries must be finite and non-negative");
  }
  if (!all_finite(upper)) throw ValidationError("upper", "entries must be finite");
  if ((lower.array() > upper.array()).any()) {
    throw ValidationError("upper", "must satisfy lower <= upper");
  }

  if (objective.size() != n) {
    throw ValidationError("objective", "parameter arrays must have n entries");
  }
  const Family family = objective.family();
  if ((family == Family::kCrashing || family == Family::kFuelOpt) &&
      (lower.array() <= 0.0).any()) {
    throw ValidationError("lower", to_string(family) + " objective requires lower > 0");
  }
  if (mode == Mode::kContinuous && !objective.has_derivative()) {
    throw ValidationError("objective", "continuous mode requires a derivative");
  }
  if (mode == Mode::kInteger) {
    if (!all_integral(a)) throw ValidationError("a", "integer mode requires integral values");
    if (!is_integral(B)) throw ValidationError("B", "integer mode requires an integral value");
    if (!all_integral(lower)) throw ValidationError("lower", "integer mode requires integral values");
    if (!all_integral(upper)) throw ValidationError("upper", "integer mode requires integral values");
  }
}

Index NestedInstance::block_of(Index i) const {
  const auto it = std::upper_bound(s.begin(), s.end(), i);
  return static_cast<Index>(it - s.begin()) + 1;
}

bool NestedInstance::has_integer_data() const {
  return all_integral(a) && is_integral(B) && all_integral(lower) && all_integral(upper);
}

double NestedInstance::cost(const VectorXd& x) const {
  double total = 0.0;
  for (Index i = 0; i < x.size(); ++i) total += objective.value(i, x[i]);
  return total;
}

}  // namespace nested
