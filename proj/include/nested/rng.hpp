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

#ifndef NESTED_RNG_HPP
#define NESTED_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace nested {

/// Seeded random source used by every generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The distribution transforms are implemented here instead of
/// using <random> distributions, which differ between standard libraries.
/// Changing any transform changes published instances; bump kRngVersion.
class Rng {
 public:
  static constexpr int kRngVersion = 1;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Exponential variate with the given mean, by inversion.
  double exponential(double mean);

  /// Unbiased integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  /// Integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// k distinct values from {1, ..., population}, ascending.
  std::vector<std::int64_t> sample_sorted(std::int64_t population, std::int64_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace nested

#endif  // NESTED_RNG_HPP
