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

#ifndef NESTED_GENERATE_HPP
#define NESTED_GENERATE_HPP

#include <cstdint>

#include "nested/instance.hpp"

namespace nested {

/// What to do when the drawn total B = sum alpha exceeds what the boxes can
/// carry (common for CRASHING, occasional for FUELOPT).
enum class TotalPolicy {
  kCapToReachable,  // lower B to the largest feasible total
  kAsDrawn,         // keep B = sum alpha; the instance may be infeasible
};

/// Random continuous benchmark instance. Deterministic in (family, n, m, seed).
///
/// Parameters are drawn per variable; the nested bounds are prefix sums of the
/// per-variable increments alpha evaluated at the breakpoints, B = sum alpha.
/// For m < n the breakpoints are m - 1 distinct values from {1..n-1} plus n.
///
///   F          p, alpha ~ U[0,1], p sorted ascending
///   F_UNIFORM  p ~ U[0,1], alpha ~ U[0,0.5]
///   F_ACTIVE   as F_UNIFORM with alpha sorted descending
///   CRASHING   p, upper ~ Exp(1), alpha ~ Exp(0.75), lower = min(alpha, upper/2)
///   FUELOPT    p ~ U[0.8,1.2], lower = c ~ U[0.7,1], upper = 1.5 c, alpha ~ U[1,1.2]
///
/// The F sets are drawn as covering bounds sum_{k <= s[j]} z_k >= A_j on
/// z in [0,1] with f(z) = z^4/4 + p z, and returned in the packing form via
/// x = 1 - z: objective (x - 1)^4/4 - p x (up to a constant), a_j = s[j] - A_j.
NestedInstance generate(GeneratorFamily family, Index n, Index m, std::uint64_t seed,
                        TotalPolicy policy = TotalPolicy::kCapToReachable);

/// Small integer-data instance for exact oracles: parameters are small
/// integers, upper <= 3, and the instance is feasible by construction
/// (B <= 3 n). Mode is INTEGER.
NestedInstance generate_integer(GeneratorFamily family, Index n, Index m, std::uint64_t seed);

/// Breakpoints used by the generators: m sorted values ending at n.
std::vector<Index> sample_breakpoints(class Rng& rng, Index n, Index m);

}  // namespace nested

#endif  // NESTED_GENERATE_HPP
