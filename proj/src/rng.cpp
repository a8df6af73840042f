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

#include "nested/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace nested {

double Rng::exponential(double mean) {
  // 1 - u lies in (0, 1], so the logarithm is finite.
  return -mean * std::log(1.0 - uniform());
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r = next();
  while (r >= limit) r = next();
  return r % bound;
}

std::vector<std::int64_t> Rng::sample_sorted(std::int64_t population, std::int64_t k) {
  if (k < 0 || k > population) throw std::invalid_argument("Rng::sample_sorted: k out of range");
  // Floyd's algorithm over a membership bitmap.
  std::vector<bool> chosen(static_cast<size_t>(population) + 1, false);
  for (std::int64_t j = population - k + 1; j <= population; ++j) {
    const std::int64_t t = between(1, j);
    if (chosen[static_cast<size_t>(t)]) {
      chosen[static_cast<size_t>(j)] = true;
    } else {
      chosen[static_cast<size_t>(t)] = true;
    }
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<size_t>(k));
  for (std::int64_t v = 1; v <= population; ++v) {
    if (chosen[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

}  // namespace nested
