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

#include "nested/serialize.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace nested {
namespace {

Json to_array(const VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(name, "missing");
  return j.at(name);
}

VectorXd vector_field(const Json& j, const char* name) {
  const Json& value = field(j, name);
  if (!value.is_array()) throw ValidationError(name, "expected an array");
  VectorXd out(static_cast<Index>(value.size()));
  for (size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) throw ValidationError(name, "expected numbers");
    out[static_cast<Index>(i)] = value[i].get<double>();
  }
  return out;
}

double number_field(const Json& j, const char* name) {
  const Json& value = field(j, name);
  if (!value.is_number()) throw ValidationError(name, "expected a number");
  return value.get<double>();
}

Index integer_field(const Json& j, const char* name) {
  const Json& value = field(j, name);
  if (!value.is_number_integer()) throw ValidationError(name, "expected an integer");
  return value.get<Index>();
}

std::string string_field(const Json& j, const char* name) {
  const Json& value = field(j, name);
  if (!value.is_string()) throw ValidationError(name, "expected a string");
  return value.get<std::string>();
}

Json objective_to_json(const Objective& obj) {
  Json params;
  switch (obj.family()) {
    case Family::kF:
      params["p"] = to_array(obj.first());
      if (!obj.second().isZero(0.0)) params["t"] = to_array(obj.second());
      break;
    case Family::kCrashing:
      params["k"] = to_array(obj.first());
      params["p"] = to_array(obj.second());
      break;
    case Family::kFuelOpt:
      params["p"] = to_array(obj.first());
      params["c"] = to_array(obj.second());
      break;
    case Family::kQuadratic:
      params["w"] = to_array(obj.first());
      params["t"] = to_array(obj.second());
      break;
    case Family::kCustom:
      throw std::invalid_argument("custom objectives cannot be serialized");
  }
  return Json{{"family", to_string(obj.family())}, {"params", params}};
}

Objective objective_from_json(const Json& j) {
  const Json& obj = field(j, "objective");
  Family family;
  try {
    family = parse_family(string_field(obj, "family"));
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError("objective.family", e.what());
  }
  const Json& params = field(obj, "params");
  try {
    switch (family) {
      case Family::kF:
        if (params.contains("t")) return Objective::f(vector_field(params, "p"), vector_field(params, "t"));
        return Objective::f(vector_field(params, "p"));
      case Family::kCrashing:
        return Objective::crashing(vector_field(params, "k"), vector_field(params, "p"));
      case Family::kFuelOpt:
        return Objective::fuelopt(vector_field(params, "p"), vector_field(params, "c"));
      case Family::kQuadratic:
        return Objective::quadratic(vector_field(params, "w"), vector_field(params, "t"));
      case Family::kCustom:
        break;
    }
  } catch (const ValidationError& e) {
    if (e.field().rfind("objective", 0) == 0) throw;
    throw ValidationError("objective.params." + e.field(), e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError("objective.params", e.what());
  }
  throw ValidationError("objective.family", "custom objectives cannot be read");
}

}  // namespace

Json instance_to_json(const NestedInstance& inst) {
  Json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["s"] = inst.s;
  j["a"] = to_array(inst.a);
  j["B"] = inst.B;
  j["lower"] = to_array(inst.lower);
  j["upper"] = to_array(inst.upper);
  j["mode"] = to_string(inst.mode);
  j["objective"] = objective_to_json(inst.objective);
  return j;
}

NestedInstance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("instance", "expected a JSON object");
  NestedInstance inst;
  inst.n = integer_field(j, "n");
  inst.m = integer_field(j, "m");
  const Json& s = field(j, "s");
  if (!s.is_array()) throw ValidationError("s", "expected an array");
  for (const Json& v : s) {
    if (!v.is_number_integer()) throw ValidationError("s", "expected integers");
    inst.s.push_back(v.get<Index>());
  }
  inst.a = vector_field(j, "a");
  inst.B = number_field(j, "B");
  inst.lower = vector_field(j, "lower");
  inst.upper = vector_field(j, "upper");
  try {
    inst.mode = parse_mode(string_field(j, "mode"));
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError("mode", e.what());
  }
  inst.objective = objective_from_json(j);
  inst.validate();
  return inst;
}

std::string write_instance(const NestedInstance& inst) { return instance_to_json(inst).dump(); }

NestedInstance read_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("instance", e.what());
  }
  return instance_from_json(j);
}

Json solution_to_json(const Solution& sol) {
  Json j;
  j["status"] = to_string(sol.status);
  j["objective"] = sol.objective;
  j["epsilon"] = sol.epsilon;
  j["x"] = to_array(sol.x);
  return j;
}

Json solution_to_json(const Solution& sol, const SolveStats& stats) {
  Json j = solution_to_json(sol);
  j["stats"] = {{"rap_calls", stats.rap_calls},
                {"recursion_levels", stats.recursion_levels},
                {"active_constraints", stats.active_constraints},
                {"wall_ms", stats.wall_ms}};
  return j;
}

Solution solution_from_json(const Json& j) {
  Solution sol;
  try {
    sol.status = parse_status(string_field(j, "status"));
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError("status", e.what());
  }
  sol.x = vector_field(j, "x");
  if (j.contains("objective") && j["objective"].is_number()) sol.objective = j["objective"];
  if (j.contains("epsilon") && j["epsilon"].is_number()) sol.epsilon = j["epsilon"];
  return sol;
}

Json report_to_json(const FeasibilityReport& report) {
  return Json{{"feasible", report.feasible},
              {"sum_error", report.sum_error},
              {"max_box_violation", report.max_box_violation},
              {"prefix_slacks", to_array(report.prefix_slacks)}};
}

Json report_to_json(const KktReport& report) {
  return Json{{"verdict", report.verdict ? "pass" : "fail"},
              {"feasible", report.feasible},
              {"max_within_block_gap", report.max_within_block_gap},
              {"within_block_violations", report.within_block_violations},
              {"boundary_violations", report.boundary_violations},
              {"prefix_slacks", to_array(report.prefix_slacks)}};
}

Json report_to_json(const ExchangeReport& report) {
  return Json{{"verdict", report.feasible && report.optimal ? "pass" : "fail"},
              {"feasible", report.feasible},
              {"optimal", report.optimal},
              {"best_improvement", report.best_improvement},
              {"from", report.from},
              {"to", report.to}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace nested
