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

#include "nested/types.hpp"

namespace nested {

std::string to_string(Mode mode) {
  return mode == Mode::kInteger ? "integer" : "continuous";
}

std::string to_string(Family family) {
  switch (family) {
    case Family::kF: return "f";
    case Family::kCrashing: return "crashing";
    case Family::kFuelOpt: return "fuelopt";
    case Family::kQuadratic: return "quadratic";
    case Family::kCustom: return "custom";
  }
  return "unknown";
}

std::string to_string(GeneratorFamily family) {
  switch (family) {
    case GeneratorFamily::kF: return "f";
    case GeneratorFamily::kFUniform: return "f-uniform";
    case GeneratorFamily::kFActive: return "f-active";
    case GeneratorFamily::kCrashing: return "crashing";
    case GeneratorFamily::kFuelOpt: return "fuelopt";
  }
  return "unknown";
}

std::string to_string(Status status) {
  switch (status) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kTimeout: return "timeout";
  }
  return "unknown";
}

Mode parse_mode(const std::string& text) {
  if (text == "integer" || text == "int") return Mode::kInteger;
  if (text == "continuous" || text == "cont") return Mode::kContinuous;
  throw ValidationError("mode", "unknown mode '" + text + "'");
}

Family parse_family(const std::string& text) {
  if (text == "f") return Family::kF;
  if (text == "crashing") return Family::kCrashing;
  if (text == "fuelopt") return Family::kFuelOpt;
  if (text == "quadratic") return Family::kQuadratic;
  throw ValidationError("objective.family", "unknown family '" + text + "'");
}

GeneratorFamily parse_generator_family(const std::string& text) {
  if (text == "f") return GeneratorFamily::kF;
  if (text == "f-uniform" || text == "f_uniform") return GeneratorFamily::kFUniform;
  if (text == "f-active" || text == "f_active") return GeneratorFamily::kFActive;
  if (text == "crashing") return GeneratorFamily::kCrashing;
  if (text == "fuelopt") return GeneratorFamily::kFuelOpt;
  throw ValidationError("family", "unknown generator family '" + text + "'");
}

Status parse_status(const std::string& text) {
  if (text == "optimal") return Status::kOptimal;
  if (text == "infeasible") return Status::kInfeasible;
  if (text == "timeout") return Status::kTimeout;
  throw ValidationError("status", "unknown status '" + text + "'");
}

}  // namespace nested
