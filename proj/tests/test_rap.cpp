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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "nested/rap.hpp"
#include "nested/rng.hpp"
#include "support.hpp"

namespace nested {
namespace {

using testing::squares;
using testing::vec;

VectorXi64 ivec(std::initializer_list<std::int64_t> values) {
  VectorXi64 v(static_cast<Index>(values.size()));
  Index i = 0;
  for (auto x : values) v[i++] = x;
  return v;
}

double cost(const Objective& f, const VectorXi64& x) {
  double total = 0.0;
  for (Index i = 0; i < x.size(); ++i) total += f.value(i, static_cast<double>(x[i]));
  return total;
}

// Exact optimum value by enumeration over (variable, units used).
double enumerate_optimum(const RapProblem<std::int64_t>& p) {
  const double inf = std::numeric_limits<double>::infinity();
  const auto R = static_cast<size_t>(p.target);
  std::vector<double> best(R + 1, inf);
  best[0] = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    std::vector<double> next(R + 1, inf);
    for (size_t used = 0; used <= R; ++used) {
      if (best[used] == inf) continue;
      for (std::int64_t t = p.lower[i]; t <= p.upper[i] && used + static_cast<size_t>(t) <= R; ++t) {
        const double c = best[used] + p.objective.value(p.offset + i, static_cast<double>(t));
        next[used + static_cast<size_t>(t)] = std::min(next[used + static_cast<size_t>(t)], c);
      }
    }
    best.swap(next);
  }
  return best[R];
}

TEST(RapContinuous, Symmetric) {
  const Objective f = squares(3);
  const VectorXd lo = VectorXd::Zero(3);
  const VectorXd hi = VectorXd::Constant(3, 10.0);
  const VectorXd x = rap_continuous({f, 0, lo, hi, 6.0}, 1e-10);
  EXPECT_NEAR((x - vec({2, 2, 2})).cwiseAbs().maxCoeff(), 0.0, 1e-10);
  EXPECT_DOUBLE_EQ(x.sum(), 6.0);
}

TEST(RapContinuous, BoundsForce) {
  const Objective f = Objective::f(vec({0, 0}));
  const VectorXd lo = VectorXd::Zero(2);
  const VectorXd hi = VectorXd::Ones(2);
  const VectorXd x = rap_continuous({f, 0, lo, hi, 2.0}, 1e-10);
  EXPECT_EQ(x, vec({1, 1}));
}

TEST(RapContinuous, UpperBoundBinds) {
  // Grid search at step 1e-3 over x1 gives (1, 3).
  const Objective f = squares(2);
  const VectorXd lo = VectorXd::Zero(2);
  const VectorXd hi = vec({1, 10});
  const VectorXd x = rap_continuous({f, 0, lo, hi, 4.0}, 1e-10);
  EXPECT_NEAR(x[0], 1.0, 1e-10);
  EXPECT_NEAR(x[1], 3.0, 1e-10);
}

TEST(RapContinuous, LowerTargetReturnsLower) {
  const Objective f = squares(3);
  const VectorXd lo = vec({1, 2, 0});
  const VectorXd hi = vec({4, 4, 4});
  EXPECT_EQ(rap_continuous({f, 0, lo, hi, 3.0}, 1e-9), lo);
  EXPECT_EQ(rap_continuous({f, 0, lo, hi, 12.0}, 1e-9), hi);
  EXPECT_THROW(rap_continuous({f, 0, lo, hi, 13.0}, 1e-9), InfeasibleError);
  EXPECT_THROW(rap_continuous({f, 0, lo, hi, 2.0}, 1e-9), InfeasibleError);
}

TEST(RapContinuous, OffsetSelectsParameters) {
  const Objective f = Objective::quadratic(vec({1, 1, 1, 3}), vec({0, 0, 0, 0}));
  const VectorXd lo = VectorXd::Zero(2);
  const VectorXd hi = VectorXd::Constant(2, 10.0);
  const VectorXd x = rap_continuous({f, 2, lo, hi, 4.0}, 1e-10);  // weights (1, 3)
  EXPECT_NEAR(x[0], 3.0, 1e-9);
  EXPECT_NEAR(x[1], 1.0, 1e-9);
}

TEST(RapContinuous, FlatRegionFillsInIndexOrder) {
  // Linear-in-the-middle custom function: f' = 0 on [1, 2].
  const Objective f = Objective::custom(
      3,
      [](Index, double x) { return x < 1 ? (x - 1) * (x - 1) : (x > 2 ? (x - 2) * (x - 2) : 0.0); },
      [](Index, double x) { return x < 1 ? 2 * (x - 1) : (x > 2 ? 2 * (x - 2) : 0.0); });
  const VectorXd lo = VectorXd::Zero(3);
  const VectorXd hi = VectorXd::Constant(3, 5.0);
  const VectorXd x = rap_continuous({f, 0, lo, hi, 4.0}, 1e-9);
  EXPECT_NEAR(x.sum(), 4.0, 1e-12);
  EXPECT_NEAR(x[0], 2.0, 1e-8);
  EXPECT_NEAR(x[1], 1.0, 1e-8);
  EXPECT_NEAR(x[2], 1.0, 1e-8);
}

TEST(RapContinuous, PairwiseKktAndExactSum) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + static_cast<Index>(rng.below(12));
    VectorXd p(n);
    VectorXd c(n);
    VectorXd lo(n);
    VectorXd hi(n);
    for (Index i = 0; i < n; ++i) {
      p[i] = rng.uniform(0.8, 1.2);
      c[i] = rng.uniform(0.7, 1.0);
      lo[i] = c[i];
      hi[i] = 1.5 * c[i];
    }
    const Objective f = Objective::fuelopt(p, c);
    const double target = lo.sum() + rng.uniform() * (hi.sum() - lo.sum());
    const double eps = 1e-9;
    const VectorXd x = rap_continuous({f, 0, lo, hi, target}, eps);
    EXPECT_NEAR(x.sum(), target, 1e-12 * std::max(1.0, target));
    for (Index i = 0; i < n; ++i) {
      ASSERT_GE(x[i], lo[i]);
      ASSERT_LE(x[i], hi[i]);
    }
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (x[i] < hi[i] && x[j] > lo[j]) {
          const double tau =
              10 * eps * std::max(f.second_derivative(i, x[i]), f.second_derivative(j, x[j])) +
              1e-12;
          EXPECT_GE(f.derivative(i, x[i]), f.derivative(j, x[j]) - tau);
        }
      }
    }
  }
}

TEST(RapContinuous, MonotoneInTarget) {
  const Objective f = Objective::crashing(VectorXd::Zero(5), vec({0.3, 1.0, 2.0, 0.7, 5.0}));
  const VectorXd lo = vec({0.1, 0.2, 0.1, 0.3, 0.1});
  const VectorXd hi = vec({1.0, 1.5, 0.8, 2.0, 1.2});
  VectorXd previous = lo;
  for (double r = lo.sum(); r <= hi.sum(); r += 0.05) {
    const VectorXd x = rap_continuous({f, 0, lo, hi, r}, 1e-10);
    for (Index i = 0; i < 5; ++i) EXPECT_GE(x[i], previous[i] - 2e-10);
    previous = x;
  }
}

TEST(RapContinuous, IterationsBounded) {
  const Objective f = squares(1000);
  const VectorXd lo = VectorXd::Zero(1000);
  const VectorXd hi = VectorXd::Constant(1000, 1e6);
  int iterations = 0;
  rap_continuous({f, 0, lo, hi, 12345.678}, 1e-12, &iterations);
  EXPECT_GT(iterations, 0);
  EXPECT_LE(iterations, 64);
}

TEST(OrderedMidpoint, HalvesTheDoubles) {
  EXPECT_DOUBLE_EQ(ordered_midpoint(-1.0, 1.0), 0.0);
  const double m = ordered_midpoint(1.0, 1e300);
  EXPECT_GT(m, 1.0);
  EXPECT_LT(m, 1e300);
  EXPECT_LT(m, 1e160);  // geometric rather than arithmetic
  const double a = 1.0;
  const double b = std::nextafter(a, 2.0);
  const double mid = ordered_midpoint(a, b);
  EXPECT_TRUE(mid == a || mid == b);
}

TEST(RapInteger, QuadraticMarginalTie) {
  // f1 = x^2, f2 = 3x: marginals of x1 are 1, 3, 5, ...; of x2 always 3.
  // The tie at 3 goes to the lowest index, so (2, 2) with objective 10.
  const Objective f =
      Objective::custom(2, [](Index i, double x) { return i == 0 ? x * x : 3 * x; });
  const VectorXi64 lo = ivec({0, 0});
  const VectorXi64 hi = ivec({4, 4});
  const RapProblem<std::int64_t> p{f, 0, lo, hi, 4};
  const VectorXi64 x = rap_integer(p);
  EXPECT_EQ(x, ivec({2, 2}));
  EXPECT_DOUBLE_EQ(cost(f, x), 10.0);
  EXPECT_EQ(rap_integer_greedy(p), ivec({2, 2}));
}

TEST(RapInteger, ThreeSquares) {
  const Objective f = squares(3);
  const VectorXi64 lo = ivec({0, 0, 0});
  const VectorXi64 hi = ivec({10, 10, 10});
  const RapProblem<std::int64_t> p{f, 0, lo, hi, 7};
  const VectorXi64 x = rap_integer(p);
  EXPECT_DOUBLE_EQ(cost(f, x), 17.0);
  EXPECT_EQ(x, ivec({3, 2, 2}));
  EXPECT_EQ(rap_integer_greedy(p), x);
}

TEST(RapInteger, NoFreeResource) {
  const Objective f = squares(3);
  const VectorXi64 lo = ivec({1, 0, 2});
  const VectorXi64 hi = ivec({5, 5, 5});
  const RapProblem<std::int64_t> p{f, 0, lo, hi, 3};
  EXPECT_EQ(rap_integer(p), lo);
  EXPECT_EQ(rap_integer_greedy(p), lo);
}

TEST(RapInteger, SingleVariable) {
  const Objective f = squares(1);
  const VectorXi64 lo = ivec({0});
  const VectorXi64 hi = ivec({5});
  const RapProblem<std::int64_t> p{f, 0, lo, hi, 5};
  EXPECT_EQ(rap_integer(p), ivec({5}));
  EXPECT_EQ(rap_integer_greedy(p), ivec({5}));
}

TEST(RapInteger, OddTargetFavoursLowestIndex) {
  const Objective f = squares(2);
  const VectorXi64 lo = ivec({0, 0});
  const VectorXi64 hi = ivec({5, 5});
  const RapProblem<std::int64_t> p{f, 0, lo, hi, 3};
  EXPECT_EQ(rap_integer(p), ivec({2, 1}));
  EXPECT_EQ(rap_integer_greedy(p), ivec({2, 1}));
}

TEST(RapInteger, Infeasible) {
  const Objective f = squares(2);
  const VectorXi64 lo = ivec({0, 0});
  const VectorXi64 hi = ivec({1, 1});
  EXPECT_THROW(rap_integer({f, 0, lo, hi, 3}), InfeasibleError);
  EXPECT_THROW(rap_integer_greedy({f, 0, lo, hi, 3}), InfeasibleError);
}

TEST(RapInteger, LargeTargetIsFast) {
  const Index n = 1000;
  const Objective f = Objective::quadratic(VectorXd::LinSpaced(n, 1.0, 2.0), VectorXd::Zero(n));
  const VectorXi64 lo = VectorXi64::Zero(n);
  const VectorXi64 hi = VectorXi64::Constant(n, 1'000'000'000);
  const VectorXi64 x = rap_integer({f, 0, lo, hi, 123'456'789'012});
  EXPECT_EQ(x.sum(), 123'456'789'012);
}

Objective random_family(Rng& rng, int family, Index n, VectorXi64& lo, VectorXi64& hi) {
  VectorXd a(n);
  VectorXd b(n);
  for (Index i = 0; i < n; ++i) {
    const auto base = rng.between(family >= 2 ? 1 : 0, 3);
    lo[i] = base;
    hi[i] = base + rng.between(0, 5);
    switch (family) {
      case 0:  // F
        a[i] = static_cast<double>(rng.between(-5, 5));
        b[i] = static_cast<double>(rng.between(0, 2));
        break;
      case 1:  // quadratic
        a[i] = static_cast<double>(rng.between(1, 4));
        b[i] = static_cast<double>(rng.between(-2, 6));
        break;
      case 2:  // crashing
        a[i] = 0.0;
        b[i] = static_cast<double>(rng.between(1, 20));
        break;
      default:  // fuelopt
        a[i] = static_cast<double>(rng.between(1, 3));
        b[i] = static_cast<double>(lo[i]);
        break;
    }
  }
  switch (family) {
    case 0:
      return Objective::f(a, b);
    case 1:
      return Objective::quadratic(a, b);
    case 2:
      return Objective::crashing(a, b);
    default:
      return Objective::fuelopt(a, b);
  }
}

TEST(RapInteger, KernelsMatchEnumeration) {
  Rng rng(99);
  for (int family = 0; family < 4; ++family) {
    for (int trial = 0; trial < 500; ++trial) {
      const Index n = 1 + static_cast<Index>(rng.below(8));
      VectorXi64 lo(n);
      VectorXi64 hi(n);
      const Objective f = random_family(rng, family, n, lo, hi);
      const std::int64_t span = std::min<std::int64_t>(hi.sum() - lo.sum(), 30 - lo.sum());
      if (span < 0) continue;
      const std::int64_t target = lo.sum() + rng.between(0, span);
      const RapProblem<std::int64_t> p{f, 0, lo, hi, target};
      const VectorXi64 fast = rap_integer(p);
      const VectorXi64 greedy = rap_integer_greedy(p);
      ASSERT_EQ(fast.sum(), target);
      const double best = enumerate_optimum(p);
      EXPECT_NEAR(cost(f, fast), best, 1e-9 * std::max(1.0, std::abs(best)))
          << "family " << family << " trial " << trial;
      EXPECT_NEAR(cost(f, greedy), best, 1e-9 * std::max(1.0, std::abs(best)));
      EXPECT_EQ(fast, greedy) << "family " << family << " trial " << trial;
    }
  }
}

TEST(RapContinuous, AgreesWithIntegerOnIntegralOptimum) {
  // Weights (1, 2, 2) at R = 8 put the continuous optimum on (4, 2, 2).
  const Objective f = Objective::quadratic(vec({1, 2, 2}), vec({0, 0, 0}));
  const VectorXd lo = VectorXd::Zero(3);
  const VectorXd hi = VectorXd::Constant(3, 10.0);
  const VectorXd x = rap_continuous({f, 0, lo, hi, 8.0}, 1e-10);
  EXPECT_NEAR(x[0], 4.0, 1e-9);
  EXPECT_NEAR(x[1], 2.0, 1e-9);
  const VectorXi64 z = rap_integer({f, 0, VectorXi64::Zero(3), VectorXi64::Constant(3, 10), 8});
  EXPECT_EQ(z, ivec({4, 2, 2}));
}

}  // namespace
}  // namespace nested
