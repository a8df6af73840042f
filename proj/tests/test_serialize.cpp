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

#include <gtest/gtest.h>

#include "nested/generate.hpp"
#include "nested/serialize.hpp"
#include "nested/solver.hpp"
#include "support.hpp"

namespace nested {
namespace {

std::string field_of(const std::function<void()>& action) {
  try {
    action();
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<none>";
}

void expect_same(const NestedInstance& a, const NestedInstance& b) {
  EXPECT_EQ(a.n, b.n);
  EXPECT_EQ(a.m, b.m);
  EXPECT_EQ(a.s, b.s);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.B, b.B);
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_EQ(a.mode, b.mode);
  EXPECT_EQ(a.objective.family(), b.objective.family());
  EXPECT_EQ(a.objective.first(), b.objective.first());
  EXPECT_EQ(a.objective.second(), b.objective.second());
}

TEST(Serialize, InstanceRoundTripIsExact) {
  for (GeneratorFamily family : {GeneratorFamily::kF, GeneratorFamily::kFUniform,
                                 GeneratorFamily::kFActive, GeneratorFamily::kCrashing,
                                 GeneratorFamily::kFuelOpt}) {
    const NestedInstance inst = generate(family, 50, 20, 11);
    const std::string text = write_instance(inst);
    const NestedInstance back = read_instance(text);
    expect_same(inst, back);
    EXPECT_EQ(write_instance(back), text);
  }
  expect_same(testing::two_variable_example(Mode::kInteger),
              read_instance(write_instance(testing::two_variable_example(Mode::kInteger))));
}

TEST(Serialize, FShiftWrittenOnlyWhenNonzero) {
  const NestedInstance shifted = generate(GeneratorFamily::kF, 5, 5, 1);
  EXPECT_TRUE(instance_to_json(shifted)["objective"]["params"].contains("t"));
  NestedInstance plain = shifted;
  plain.objective = Objective::f(shifted.objective.first());
  const Json j = instance_to_json(plain);
  EXPECT_FALSE(j["objective"]["params"].contains("t"));
  EXPECT_EQ(j["objective"]["family"], "f");
  expect_same(plain, instance_from_json(j));
}

TEST(Serialize, ErrorsNameTheField) {
  const Json good = instance_to_json(testing::tighten_example());

  Json bad_s = good;
  bad_s["s"] = {3, 2, 4};
  EXPECT_EQ(field_of([&] { instance_from_json(bad_s); }), "s");

  Json bad_a = good;
  bad_a["a"] = {7, 5};
  EXPECT_EQ(field_of([&] { instance_from_json(bad_a); }), "a");

  Json missing = good;
  missing.erase("B");
  EXPECT_EQ(field_of([&] { instance_from_json(missing); }), "B");

  Json short_upper = good;
  short_upper["upper"] = {1, 1};
  EXPECT_EQ(field_of([&] { instance_from_json(short_upper); }), "upper");

  Json bad_params = good;
  bad_params["objective"]["params"]["w"] = {1, 1, 0, 1};
  EXPECT_EQ(field_of([&] { instance_from_json(bad_params); }), "objective.params.w");

  Json bad_family = good;
  bad_family["objective"]["family"] = "cubic";
  EXPECT_EQ(field_of([&] { instance_from_json(bad_family); }), "objective.family");

  Json bad_mode = good;
  bad_mode["mode"] = "discrete";
  EXPECT_EQ(field_of([&] { instance_from_json(bad_mode); }), "mode");

  EXPECT_EQ(field_of([] { read_instance("{not json"); }), "instance");
}

TEST(Serialize, CustomObjectivesAreRejected) {
  NestedInstance inst = testing::two_variable_example();
  inst.objective = Objective::custom(2, [](Index, double x) { return x; }, [](Index, double) { return 1.0; });
  EXPECT_THROW(instance_to_json(inst), std::invalid_argument);
}

TEST(Serialize, SolutionRoundTrip) {
  const SolveResult r = solve(generate(GeneratorFamily::kFuelOpt, 30, 10, 2));
  const Json j = solution_to_json(r.solution, r.stats);
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_EQ(j["stats"]["rap_calls"], 19);
  EXPECT_TRUE(j["stats"].contains("active_constraints"));
  const Solution back = solution_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.x, r.solution.x);
  EXPECT_EQ(back.objective, r.solution.objective);
  EXPECT_EQ(back.epsilon, r.solution.epsilon);
  EXPECT_EQ(back.status, r.solution.status);
  EXPECT_FALSE(solution_to_json(r.solution).contains("stats"));
}

TEST(Serialize, Reports) {
  KktReport kkt;
  kkt.verdict = true;
  kkt.feasible = true;
  EXPECT_EQ(report_to_json(kkt)["verdict"], "pass");
  kkt.verdict = false;
  EXPECT_EQ(report_to_json(kkt)["verdict"], "fail");
}

}  // namespace
}  // namespace nested
