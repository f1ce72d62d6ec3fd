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
#ifndef QCLAB_SCHEDULE_H_
#define QCLAB_SCHEDULE_H_

#include <cstdint>
#include <string>

namespace qclab {

enum class ScheduleKind { kConstant, kPolynomial };

std::string ScheduleKindName(ScheduleKind kind);

// Step sizes gamma_t. The polynomial kind is gamma0 * (t + 1)^(theta - 1);
// the +1 offset keeps t = 0 well defined.
class StepSchedule {
 public:
  static StepSchedule Constant(double gamma0);
  static StepSchedule Polynomial(double gamma0, double theta);

  double At(int64_t t) const;

  ScheduleKind kind() const { return kind_; }
  double gamma0() const { return gamma0_; }
  double theta() const { return theta_; }

 private:
  StepSchedule(ScheduleKind kind, double gamma0, double theta)
      : kind_(kind), gamma0_(gamma0), theta_(theta) {}

  ScheduleKind kind_;
  double gamma0_;
  double theta_;
};

inline constexpr double kDefaultHMin = 1e-4;

// Quantile levels p_t = 1 - h_t. The polynomial kind uses
// h_t = max(h_min, (1 - p0) * (t + 1)^nu) with nu <= 0, so p_t never
// exceeds 1 - h_min.
class QuantileSchedule {
 public:
  static QuantileSchedule Constant(double p0);
  static QuantileSchedule Polynomial(double p0, double nu,
                                     double h_min = kDefaultHMin);

  double At(int64_t t) const;
  double HAt(int64_t t) const { return 1.0 - At(t); }

  ScheduleKind kind() const { return kind_; }
  double p0() const { return p0_; }
  double nu() const { return nu_; }
  double h_min() const { return h_min_; }

 private:
  QuantileSchedule(ScheduleKind kind, double p0, double nu, double h_min)
      : kind_(kind), p0_(p0), nu_(nu), h_min_(h_min) {}

  ScheduleKind kind_;
  double p0_;
  double nu_;
  double h_min_;
};

struct ScheduleExponents {
  double theta;  // gamma_t ~ t^(theta - 1)
  double nu;     // h_t ~ t^nu
};

// Exponents minimizing the time-varying convergence bound for tail order
// q in (1, 2]: theta = (1 - 1/q) / (2 - 1/q), nu = -1 / (4 - 2/q).
ScheduleExponents OptimalScheduleExponents(double q);

}  // namespace qclab

#endif  // QCLAB_SCHEDULE_H_
