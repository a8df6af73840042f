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

#include "nested/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nested {
namespace {

void require_size(const VectorXd& v, Index n, const char* name) {
  if (v.size() != n) {
    throw ValidationError(std::string("objective.params.") + name,
                          "expected " + std::to_string(n) + " entries");
  }
}

void require_positive_domain(double x, Family family) {
  if (!(x > 0.0)) {
    throw std::domain_error(to_string(family) + " objective undefined at x=" +
                            std::to_string(x));
  }
}

double clamp_to(double x, double lo, double hi) {
  if (std::isnan(x)) return lo;
  return std::min(std::max(x, lo), hi);
}

}  // namespace

Objective Objective::f(VectorXd p) {
  VectorXd t = VectorXd::Zero(p.size());
  return f(std::move(p), std::move(t));
}

Objective Objective::f(VectorXd p, VectorXd t) {
  require_size(t, p.size(), "t");
  Objective obj(Family::kF, p.size());
  obj.first_ = std::move(p);
  obj.second_ = std::move(t);
  return obj;
}

Objective Objective::crashing(VectorXd k, VectorXd p) {
  require_size(k, p.size(), "k");
  Objective obj(Family::kCrashing, p.size());
  obj.first_ = std::move(k);
  obj.second_ = std::move(p);
  return obj;
}

Objective Objective::fuelopt(VectorXd p, VectorXd c) {
  require_size(c, p.size(), "c");
  Objective obj(Family::kFuelOpt, p.size());
  obj.first_ = std::move(p);
  obj.second_ = std::move(c);
  return obj;
}

Objective Objective::quadratic(VectorXd w, VectorXd t) {
  require_size(t, w.size(), "t");
  if ((w.array() <= 0.0).any()) {
    throw ValidationError("objective.params.w", "weights must be positive");
  }
  Objective obj(Family::kQuadratic, w.size());
  obj.first_ = std::move(w);
  obj.second_ = std::move(t);
  return obj;
}

Objective Objective::custom(Index size, Callback value, Callback derivative) {
  if (!value) throw std::invalid_argument("custom objective needs a value callback");
  Objective obj(Family::kCustom, size);
  obj.value_ = std::move(value);
  obj.derivative_ = std::move(derivative);
  return obj;
}

double Objective::value(Index i, double x) const {
  const double shift = offset_.size() == 0 ? 0.0 : offset_[i];
  switch (family_) {
    case Family::kF: {
      const double u = x - second_[i];
      const double u2 = u * u;
      return shift + 0.25 * u2 * u2 + first_[i] * x;
    }
    case Family::kCrashing:
      require_positive_domain(x, family_);
      return shift + first_[i] + second_[i] / x;
    case Family::kFuelOpt: {
      require_positive_domain(x, family_);
      const double r = second_[i] / x;
      return shift + first_[i] * second_[i] * r * r * r;
    }
    case Family::kQuadratic: {
      const double d = x - second_[i];
      return shift + first_[i] * d * d;
    }
    case Family::kCustom:
      return shift + value_(i, x);
  }
  return 0.0;
}

double Objective::derivative(Index i, double x) const {
  switch (family_) {
    case Family::kF: {
      const double u = x - second_[i];
      return u * u * u + first_[i];
    }
    case Family::kCrashing:
      require_positive_domain(x, family_);
      return -second_[i] / (x * x);
    case Family::kFuelOpt: {
      require_positive_domain(x, family_);
      const double c = second_[i];
      const double r = c / x;
      return -3.0 * first_[i] * r * r * r * r;
    }
    case Family::kQuadratic:
      return 2.0 * first_[i] * (x - second_[i]);
    case Family::kCustom:
      if (!derivative_) {
        throw std::logic_error("custom objective has no derivative callback");
      }
      return derivative_(i, x);
  }
  return 0.0;
}

double Objective::second_derivative(Index i, double x) const {
  switch (family_) {
    case Family::kF: {
      const double u = x - second_[i];
      return 3.0 * u * u;
    }
    case Family::kCrashing:
      require_positive_domain(x, family_);
      return 2.0 * second_[i] / (x * x * x);
    case Family::kFuelOpt: {
      require_positive_domain(x, family_);
      const double r = second_[i] / x;
      return 12.0 * first_[i] * r * r * r * r / x;
    }
    case Family::kQuadratic:
      return 2.0 * first_[i];
    case Family::kCustom: {
      const double h = 1e-6 * std::max(1.0, std::abs(x));
      if (derivative_) {
        return (derivative_(i, x + h) - derivative_(i, x - h)) / (2.0 * h);
      }
      return (value_(i, x + h) - 2.0 * value_(i, x) + value_(i, x - h)) / (h * h);
    }
  }
  return 0.0;
}

double Objective::inverse_derivative(Index i, double lambda, double lo,
                                     double hi) const {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  switch (family_) {
    case Family::kF:
      return clamp_to(second_[i] + std::cbrt(lambda - first_[i]), lo, hi);
    case Family::kCrashing: {
      if (lambda >= 0.0) return hi;
      return clamp_to(std::sqrt(second_[i] / -lambda), lo, hi);
    }
    case Family::kFuelOpt: {
      if (lambda >= 0.0) return hi;
      const double c = second_[i];
      const double c2 = c * c;
      return clamp_to(std::sqrt(std::sqrt(3.0 * first_[i] * c2 * c2 / -lambda)),
                      lo, hi);
    }
    case Family::kQuadratic:
      return clamp_to(second_[i] + lambda / (2.0 * first_[i]), lo, hi);
    case Family::kCustom: {
      if (derivative(i, lo) > lambda) return lo;
      if (derivative(i, hi) <= lambda) return hi;
      double left = lo;
      double right = hi;
      for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (left + right);
        if (mid <= left || mid >= right) break;
        if (derivative(i, mid) <= lambda) {
          left = mid;
        } else {
          right = mid;
        }
      }
      return left;
    }
  }
  return kInf;
}

std::optional<VectorXd> Objective::scale_parameters() const {
  switch (family_) {
    case Family::kCrashing:
      return second_.array().sqrt().matrix();
    case Family::kFuelOpt:
      return (second_.array() * first_.array().sqrt().sqrt()).matrix();
    case Family::kQuadratic:
      // w x^2 = gamma (x / gamma)^2 with gamma = 1 / w; only for zero targets.
      if ((second_.array() != 0.0).any()) return std::nullopt;
      return first_.cwiseInverse();
    case Family::kF:
    case Family::kCustom:
      return std::nullopt;
  }
  return std::nullopt;
}

Objective Objective::with_constant_offset(const VectorXd& shift) const {
  require_size(shift, size_, "offset");
  Objective copy = *this;
  if (copy.offset_.size() == 0) {
    copy.offset_ = shift;
  } else {
    copy.offset_ += shift;
  }
  return copy;
}

}  // namespace nested
