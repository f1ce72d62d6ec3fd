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
#ifndef QCLAB_QUADRATIC_PROBLEM_H_
#define QCLAB_QUADRATIC_PROBLEM_H_

#include <optional>

#include "qclab/noise_model.h"
#include "qclab/problem.h"

namespace qclab {

// f(x) = 1/2 (x - x_star)^T A (x - x_star) with diagonal A and additive
// per-coordinate noise on the gradient. L = max_i A_ii and f_inf = 0.
//
// For gaussian noise sigma_q has a closed form (sigma * sqrt(d) at q = 2);
// heavy-tailed models need a declared q and a sigma_q obtained from
// CalibrateSigmaQ() before any bound is evaluated.
class QuadraticProblem : public StochasticProblem {
 public:
  QuadraticProblem(ParamVector curvature, ParamVector target, NoiseModel noise,
                   std::optional<double> q = std::nullopt,
                   std::optional<double> sigma_q = std::nullopt);

  // Copy with the operative sigma_q replaced.
  QuadraticProblem WithSigmaQ(double sigma_q) const;

  std::size_t dim() const override { return target_.dim(); }
  double Value(const ParamVector& x) const override;
  void ExactGradientInto(const ParamVector& x,
                         ParamVector& out) const override;
  void SampleGradientInto(const ParamVector& x, RngStream& rng,
                          ParamVector& out) const override;
  ProblemConstants constants() const override { return constants_; }
  ParamVector Minimizer() const override { return target_; }
  std::string Describe() const override;
  std::optional<std::vector<NormAtom>> NormAtoms(
      const ParamVector& x) const override;
  bool NoiseMomentFinite(double order) const override {
    return noise_.MomentFinite(order);
  }

  const ParamVector& curvature() const { return curvature_; }
  const NoiseModel& noise() const { return noise_; }

 private:
  ParamVector curvature_;
  ParamVector target_;
  NoiseModel noise_;
  ProblemConstants constants_;
};

// (E||sigma * Z||^q)^(1/q) for Z standard normal in R^d.
double GaussianNormMoment(double sigma, std::size_t dim, double q);

}  // namespace qclab

#endif  // QCLAB_QUADRATIC_PROBLEM_H_
