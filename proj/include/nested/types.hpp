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

#ifndef NESTED_TYPES_HPP
#define NESTED_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace nested {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using VectorXi64 = Vector<std::int64_t>;
using Eigen::Index;
using Eigen::VectorXd;

enum class Mode { kInteger, kContinuous };

// Objective families. The generator-only variants (F_UNIFORM, F_ACTIVE) share
// the F objective and differ only in how parameters are drawn.
enum class Family { kF, kCrashing, kFuelOpt, kQuadratic, kCustom };

enum class GeneratorFamily { kF, kFUniform, kFActive, kCrashing, kFuelOpt };

enum class Status { kOptimal, kInfeasible, kTimeout };

std::string to_string(Mode mode);
std::string to_string(Family family);
std::string to_string(GeneratorFamily family);
std::string to_string(Status status);

Mode parse_mode(const std::string& text);
Family parse_family(const std::string& text);
GeneratorFamily parse_generator_family(const std::string& text);
Status parse_status(const std::string& text);

// Thrown when instance data violates a structural invariant. `field` names the
// offending JSON field so callers can report it.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nested

#endif  // NESTED_TYPES_HPP
