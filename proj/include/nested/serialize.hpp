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

#ifndef NESTED_SERIALIZE_HPP
#define NESTED_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "nested/instance.hpp"
#include "nested/verify.hpp"

namespace nested {

using Json = nlohmann::json;

/// Instance wire format:
///   {"n", "m", "s", "a", "B", "lower", "upper", "mode",
///    "objective": {"family", "params": {...}}}
/// with params F {"p"}, CRASHING {"k", "p"}, FUELOPT {"p", "c"},
/// QUADRATIC {"w", "t"}. CUSTOM objectives cannot be serialized.
Json instance_to_json(const NestedInstance& inst);

/// Parses and validates. Throws ValidationError naming the field on schema or
/// invariant violations.
NestedInstance instance_from_json(const Json& j);

std::string write_instance(const NestedInstance& inst);
NestedInstance read_instance(const std::string& text);

Json solution_to_json(const Solution& sol);
Json solution_to_json(const Solution& sol, const SolveStats& stats);
Solution solution_from_json(const Json& j);

Json report_to_json(const FeasibilityReport& report);
Json report_to_json(const KktReport& report);
Json report_to_json(const ExchangeReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace nested

#endif  // NESTED_SERIALIZE_HPP
