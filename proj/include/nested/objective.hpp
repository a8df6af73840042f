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

#ifndef NESTED_OBJECTIVE_HPP
#define NESTED_OBJECTIVE_HPP

#include <functional>
#include <optional>
#include <string>

#include "nested/types.hpp"

namespace nested {

/// Separable convex objective sum_i f_i(x_i), one of a fixed set of families
/// with per-variable parameters, or a user callback.
///
///   F          f_i(x) = (x - t_i)^4 / 4 + p_i x       (t_i = 0 unless given)
///   CRASHING   f_i(x) = k_i + p_i / x               (x > 0)
///   FUELOPT    f_i(x) = p_i c_i (c_i / x)^3         (x > 0)
///   QUADRATIC  f_i(x) = w_i (x - t_i)^2             (w_i > 0)
///   CUSTOM     value callback, optional derivative callback
class Objective {
 public:
  using Callback = std::function<double(Index, double)>;

  static Objective f(VectorXd p);
  static Objective f(VectorXd p, VectorXd t);
  static Objective crashing(VectorXd k, VectorXd p);
  static Objective fuelopt(VectorXd p, VectorXd c);
  static Objective quadratic(VectorXd w, VectorXd t);
  static Objective custom(Index size, Callback value, Callback derivative = {});

  Family family() const noexcept { return family_; }
  Index size() const noexcept { return size_; }

  // Parameter arrays; meaning depends on the family (see class comment).
  // F: first = p, second = t. CRASHING: first = k, second = p. FUELOPT: first = p,
  // second = c. QUADRATIC: first = w, second = t.
  const VectorXd& first() const noexcept { return first_; }
  const VectorXd& second() const noexcept { return second_; }

  bool has_derivative() const noexcept {
    return family_ != Family::kCustom || static_cast<bool>(derivative_);
  }

  /// f_i(x). Throws std::domain_error outside the family's natural domain.
  double value(Index i, double x) const;

  /// f_i'(x). Throws std::logic_error for CUSTOM objectives without one.
  double derivative(Index i, double x) const;

  /// f_i''(x), by closed form or by a central difference of f_i'.
  double second_derivative(Index i, double x) const;

  /// Largest x in [lo, hi] with f_i'(x) <= lambda; lo when f_i'(lo) > lambda.
  double inverse_derivative(Index i, double lambda, double lo, double hi) const;

  /// Scale parameters gamma_i when every f_i = gamma_i h(x / gamma_i) for a
  /// common h (up to additive constants); empty otherwise.
  std::optional<VectorXd> scale_parameters() const;

  /// Returns a copy with `shift_i` added to every f_i.
  Objective with_constant_offset(const VectorXd& shift) const;

 private:
  Objective(Family family, Index size) : family_(family), size_(size) {}

  Family family_;
  Index size_ = 0;
  VectorXd first_;
  VectorXd second_;
  VectorXd offset_;  // additive constants from with_constant_offset
  Callback value_;
  Callback derivative_;
};

}  // namespace nested

#endif  // NESTED_OBJECTIVE_HPP
