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
#ifndef QCLAB_NOISE_MODEL_H_
#define QCLAB_NOISE_MODEL_H_

#include <string>

#include "qclab/rng.h"

namespace qclab {

// Zero-mean additive per-coordinate gradient noise.
//
//   gaussian          sigma * Z
//   student_t         scale * T_dof                    (dof > 1)
//   pareto_symmetric  scale * S * (U^(-1/alpha) - 1)   (alpha > 1)
//
// S is a random sign, U uniform on (0, 1). The magnitude in the Pareto model
// is Lomax distributed. For student_t the moment of order k exists iff
// k < dof; for pareto_symmetric iff k < alpha.
class NoiseModel {
 public:
  enum class Kind { kNone, kGaussian, kStudentT, kParetoSymmetric };

  static NoiseModel None();
  static NoiseModel Gaussian(double sigma);
  static NoiseModel StudentT(double dof, double scale);
  static NoiseModel ParetoSymmetric(double tail_index, double scale);

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  // dof for student_t, alpha for pareto_symmetric, +inf otherwise.
  double tail_index() const { return tail_index_; }

  bool IsZero() const { return kind_ == Kind::kNone || scale_ == 0.0; }
  double Sample(RngStream& rng) const;
  bool MomentFinite(double order) const;
  std::string Describe() const;

 private:
  NoiseModel(Kind kind, double scale, double tail_index)
      : kind_(kind), scale_(scale), tail_index_(tail_index) {}

  Kind kind_;
  double scale_;
  double tail_index_;
};

}  // namespace qclab

#endif  // QCLAB_NOISE_MODEL_H_
