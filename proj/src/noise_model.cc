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
#include "qclab/noise_model.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "qclab/errors.h"

namespace qclab {

NoiseModel NoiseModel::None() {
  return NoiseModel(Kind::kNone, 0.0, std::numeric_limits<double>::infinity());
}

NoiseModel NoiseModel::Gaussian(double sigma) {
  Require(std::isfinite(sigma) && sigma >= 0.0,
          "gaussian noise: sigma must be finite and non-negative");
  return NoiseModel(Kind::kGaussian, sigma,
                    std::numeric_limits<double>::infinity());
}

NoiseModel NoiseModel::StudentT(double dof, double scale) {
  Require(std::isfinite(dof) && dof > 1.0,
          "student_t noise: dof must exceed 1 for a zero mean");
  Require(std::isfinite(scale) && scale >= 0.0,
          "student_t noise: scale must be finite and non-negative");
  return NoiseModel(Kind::kStudentT, scale, dof);
}

NoiseModel NoiseModel::ParetoSymmetric(double tail_index, double scale) {
  Require(std::isfinite(tail_index) && tail_index > 1.0,
          "pareto_symmetric noise: tail_index must exceed 1 for a zero mean");
  Require(std::isfinite(scale) && scale >= 0.0,
          "pareto_symmetric noise: scale must be finite and non-negative");
  return NoiseModel(Kind::kParetoSymmetric, scale, tail_index);
}

double NoiseModel::Sample(RngStream& rng) const {
  switch (kind_) {
    case Kind::kNone:
      return 0.0;
    case Kind::kGaussian:
      return scale_ * rng.Normal();
    case Kind::kStudentT:
      return scale_ * rng.StudentT(tail_index_);
    case Kind::kParetoSymmetric: {
      const double sign = rng.Bernoulli(0.5) ? 1.0 : -1.0;
      const double magnitude =
          std::pow(rng.UniformOpen(), -1.0 / tail_index_) - 1.0;
      return sign * scale_ * magnitude;
    }
  }
  return 0.0;
}

bool NoiseModel::MomentFinite(double order) const {
  if (IsZero()) return true;
  return order < tail_index_;
}

std::string NoiseModel::Describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::kNone:
      out << "none";
      break;
    case Kind::kGaussian:
      out << "gaussian(sigma=" << scale_ << ")";
      break;
    case Kind::kStudentT:
      out << "student_t(dof=" << tail_index_ << ", scale=" << scale_ << ")";
      break;
    case Kind::kParetoSymmetric:
      out << "pareto_symmetric(tail_index=" << tail_index_
          << ", scale=" << scale_ << ")";
      break;
  }
  return out.str();
}

}  // namespace qclab
