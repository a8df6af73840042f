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

#ifndef NESTED_ORACLES_HPP
#define NESTED_ORACLES_HPP

#include "nested/instance.hpp"

namespace nested {

/// Unit-increment greedy over the whole nested problem. Starting from the
/// lower bounds, repeatedly take the cheapest variable that can still grow
/// (ties to the lowest index); a variable whose increment would break a box
/// or prefix bound leaves the candidate set for good. Integer mode only,
/// O((B - sum lower) (log n + m)).
Solution greedy_nested(const NestedInstance& inst);

/// Exact integer optimum by dynamic programming over (variable, prefix sum).
/// Among optimal points returns the lexicographically smallest. Guarded to
/// n <= 12 and B <= 40 (std::length_error otherwise).
Solution brute_force_integer(const NestedInstance& inst);

}  // namespace nested

#endif  // NESTED_ORACLES_HPP
