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

#include "nested/generate.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "nested/rng.hpp"

namespace nested {
namespace {

void check_sizes(Index n, Index m) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (m > n) throw std::invalid_argument("m > n");
}

VectorXd draw(Rng& rng, Index n, const std::function<double(Rng&)>& sampler) {
  VectorXd v(n);
  for (Index i = 0; i < n; ++i) v[i] = sampler(rng);
  return v;
}

// Nested bounds a_j = sum_{k <= s[j]} alpha_k for j < m, and B = sum alpha.
void set_prefix_bounds(NestedInstance& inst, const VectorXd& alpha) {
  inst.a.resize(inst.m - 1);
  double running = 0.0;
  Index j = 0;
  for (Index i = 0; i < inst.n; ++i) {
    running += alpha[i];
    if (j < inst.m - 1 && i + 1 == inst.s[static_cast<size_t>(j)]) inst.a[j++] = running;
  }
  inst.B = running;
}

// F instances are drawn with lower prefix bounds sum_{k <= s[j]} z_k >= A_j
// on z in [0, 1]; x = 1 - z turns them into upper prefix bounds.
void reflect_unit_box(NestedInstance& inst, const VectorXd& p, const VectorXd& alpha) {
  const VectorXd complement = VectorXd::Ones(inst.n) - alpha;
  inst.objective = Objective::f(-p, VectorXd::Ones(inst.n));
  inst.lower = VectorXd::Zero(inst.n);
  inst.upper = VectorXd::Ones(inst.n);
  set_prefix_bounds(inst, complement);
}

// Largest total the boxes and prefix bounds can carry:
// min over j of abar_j + (upper mass after block j), abar from the forward pass.
double reachable_total(const NestedInstance& inst) {
  double best = std::numeric_limits<double>::infinity();
  double abar = 0.0;
  double suffix = inst.upper.sum();
  for (Index j = 0; j < inst.m; ++j) {
    best = std::min(best, abar + suffix);
    const Index begin = inst.breakpoint(j);
    const double block = inst.upper.segment(begin, inst.breakpoint(j + 1) - begin).sum();
    suffix -= block;
    abar = j + 1 < inst.m ? std::min(abar + block, inst.a[j]) : abar + block;
  }
  return std::min(best, abar);
}

}  // namespace

std::vector<Index> sample_breakpoints(Rng& rng, Index n, Index m) {
  std::vector<Index> s;
  s.reserve(static_cast<size_t>(m));
  if (m == n) {
    for (Index i = 1; i <= n; ++i) s.push_back(i);
    return s;
  }
  for (std::int64_t v : rng.sample_sorted(n - 1, m - 1)) s.push_back(static_cast<Index>(v));
  s.push_back(n);
  return s;
}

NestedInstance generate(GeneratorFamily family, Index n, Index m, std::uint64_t seed,
                        TotalPolicy policy) {
  check_sizes(n, m);
  Rng rng(seed);
  NestedInstance inst;
  inst.n = n;
  inst.m = m;
  inst.mode = Mode::kContinuous;
  inst.s = sample_breakpoints(rng, n, m);

  const auto unit = [](Rng& r) { return r.uniform(); };
  VectorXd alpha;
  switch (family) {
    case GeneratorFamily::kF: {
      VectorXd p = draw(rng, n, unit);
      alpha = draw(rng, n, unit);
      std::stable_sort(p.data(), p.data() + n);
      reflect_unit_box(inst, p, alpha);
      break;
    }
    case GeneratorFamily::kFUniform:
    case GeneratorFamily::kFActive: {
      VectorXd p = draw(rng, n, unit);
      alpha = draw(rng, n, [](Rng& r) { return r.uniform(0.0, 0.5); });
      if (family == GeneratorFamily::kFActive) {
        std::stable_sort(alpha.data(), alpha.data() + n, std::greater<double>());
      }
      reflect_unit_box(inst, p, alpha);
      break;
    }
    case GeneratorFamily::kCrashing: {
      VectorXd p = draw(rng, n, [](Rng& r) { return r.exponential(1.0); });
      inst.upper = draw(rng, n, [](Rng& r) { return r.exponential(1.0); });
      alpha = draw(rng, n, [](Rng& r) { return r.exponential(0.75); });
      inst.lower = alpha.cwiseMin(0.5 * inst.upper);
      inst.objective = Objective::crashing(VectorXd::Zero(n), std::move(p));
      set_prefix_bounds(inst, alpha);
      break;
    }
    case GeneratorFamily::kFuelOpt: {
      VectorXd p = draw(rng, n, [](Rng& r) { return r.uniform(0.8, 1.2); });
      VectorXd c = draw(rng, n, [](Rng& r) { return r.uniform(0.7, 1.0); });
      alpha = draw(rng, n, [](Rng& r) { return r.uniform(1.0, 1.2); });
      inst.lower = c;
      inst.upper = 1.5 * c;
      inst.objective = Objective::fuelopt(std::move(p), std::move(c));
      set_prefix_bounds(inst, alpha);
      break;
    }
  }
  if (policy == TotalPolicy::kCapToReachable) inst.B = std::min(inst.B, reachable_total(inst));
  return inst;
}

NestedInstance generate_integer(GeneratorFamily family, Index n, Index m, std::uint64_t seed) {
  check_sizes(n, m);
  Rng rng(seed);
  NestedInstance inst;
  inst.n = n;
  inst.m = m;
  inst.mode = Mode::kInteger;
  inst.s = sample_breakpoints(rng, n, m);
  inst.lower = VectorXd::Zero(n);
  inst.upper = VectorXd::Zero(n);
  VectorXd alpha(n);

  switch (family) {
    case GeneratorFamily::kF:
    case GeneratorFamily::kFUniform:
    case GeneratorFamily::kFActive: {
      VectorXd p(n);
      for (Index i = 0; i < n; ++i) {
        p[i] = static_cast<double>(rng.between(0, 5));
        inst.upper[i] = static_cast<double>(rng.between(1, 3));
        alpha[i] = static_cast<double>(rng.between(0, static_cast<std::int64_t>(inst.upper[i])));
      }
      if (family == GeneratorFamily::kF) std::stable_sort(p.data(), p.data() + n);
      if (family == GeneratorFamily::kFActive) {
        std::stable_sort(alpha.data(), alpha.data() + n, std::greater<double>());
      }
      inst.objective = Objective::f(std::move(p));
      break;
    }
    case GeneratorFamily::kCrashing:
    case GeneratorFamily::kFuelOpt: {
      VectorXd p(n);
      VectorXd c(n);
      for (Index i = 0; i < n; ++i) {
        p[i] = static_cast<double>(family == GeneratorFamily::kCrashing ? rng.between(1, 10)
                                                                         : rng.between(1, 3));
        inst.lower[i] = static_cast<double>(rng.between(1, 2));
        inst.upper[i] = inst.lower[i] + static_cast<double>(rng.between(0, 1));
        alpha[i] = inst.lower[i] +
                   static_cast<double>(rng.between(0, static_cast<std::int64_t>(inst.upper[i] - inst.lower[i])));
        c[i] = inst.lower[i];
      }
      inst.objective = family == GeneratorFamily::kCrashing
                           ? Objective::crashing(VectorXd::Zero(n), std::move(p))
                           : Objective::fuelopt(std::move(p), std::move(c));
      break;
    }
  }
  set_prefix_bounds(inst, alpha);
  return inst;
}

}  // namespace nested
