//
// Copyright 2026 The qclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "qclab/schedule.h"

#include <algorithm>
#include <cmath>

#include "qclab/errors.h"

namespace qclab {

std::string ScheduleKindName(ScheduleKind kind) {
  return kind == ScheduleKind::kConstant ? "constant" : "polynomial";
}

StepSchedule StepSchedule::Constant(double gamma0) {
  Require(std::isfinite(gamma0) && gamma0 > 0.0,
          "step schedule: gamma0 must be positive and finite");
  return StepSchedule(ScheduleKind::kConstant, gamma0, 1.0);
}

StepSchedule StepSchedule::Polynomial(double gamma0, double theta) {
  Require(std::isfinite(gamma0) && gamma0 > 0.0,
          "step schedule: gamma0 must be positive and finite");
  Require(std::isfinite(theta), "step schedule: theta must be finite");
  return StepSchedule(ScheduleKind::kPolynomial, gamma0, theta);
}

double StepSchedule::At(int64_t t) const {
  Require(t >= 0, "step schedule: iteration index must be non-negative");
  if (kind_ == ScheduleKind::kConstant) return gamma0_;
  return gamma0_ * std::pow(static_cast<double>(t) + 1.0, theta_ - 1.0);
}

QuantileSchedule QuantileSchedule::Constant(double p0) {
  Require(p0 > 0.0 && p0 < 1.0, "quantile schedule: p0 must lie in (0, 1)");
  return QuantileSchedule(ScheduleKind::kConstant, p0, 0.0, kDefaultHMin);
}

QuantileSchedule QuantileSchedule::Polynomial(double p0, double nu,
                                              double h_min) {
  Require(p0 > 0.0 && p0 < 1.0, "quantile schedule: p0 must lie in (0, 1)");
  Require(std::isfinite(nu) && nu <= 0.0,
          "quantile schedule: nu must be finite and <= 0");
  Require(h_min > 0.0 && h_min < 1.0,
          "quantile schedule: h_min must lie in (0, 1)");
  return QuantileSchedule(ScheduleKind::kPolynomial, p0, nu, h_min);
}

double QuantileSchedule::At(int64_t t) const {
  Require(t >= 0, "quantile schedule: iteration index must be non-negative");
  if (kind_ == ScheduleKind::kConstant) return p0_;
  const double h = std::max(
      h_min_, (1.0 - p0_) * std::pow(static_cast<double>(t) + 1.0, nu_));
  return 1.0 - h;
}

ScheduleExponents OptimalScheduleExponents(double q) {
  Require(q > 1.0 && q <= 2.0, "schedule exponents: q must lie in (1, 2]");
  // (1 - 1/q) / (2 - 1/q) and -1 / (4 - 2/q), multiplied through by q.
  return {(q - 1.0) / (2.0 * q - 1.0), -q / (4.0 * q - 2.0)};
}

}  // namespace qclab
