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
#ifndef QCLAB_TWO_POINT_PROBLEM_H_
#define QCLAB_TWO_POINT_PROBLEM_H_

#include "qclab/problem.h"

namespace qclab {

// One-dimensional two-outcome objective
//   f_xi(x) = 1/2 (x + r)^2  with probability omega,
//             1/2 x^2        with probability 1 - omega,
// so grad f(x) = x + r * omega and x_star = -r * omega. Clipping at a
// quantile of |grad f_xi| biases the expected update away from x_star.
class TwoPointProblem : public StochasticProblem {
 public:
  // r > 0, omega in (1/2, 1); q in (1, 2] only selects which moment sigma_q
  // reports.
  TwoPointProblem(double r, double omega, double q = 2.0);

  double r() const { return r_; }
  double omega() const { return omega_; }

  std::size_t dim() const override { return 1; }
  double Value(const ParamVector& x) const override;
  void ExactGradientInto(const ParamVector& x,
                         ParamVector& out) const override;
  void SampleGradientInto(const ParamVector& x, RngStream& rng,
                          ParamVector& out) const override;
  ProblemConstants constants() const override;
  ParamVector Minimizer() const override { return ParamVector{-r_ * omega_}; }
  std::string Describe() const override;
  std::optional<std::vector<NormAtom>> NormAtoms(
      const ParamVector& x) const override;

  // Scalar conveniences.
  double GradientAt(double x) const { return x + r_ * omega_; }
  // {|x + r| with mass omega, |x| with mass 1 - omega}.
  std::vector<NormAtom> NormAtomsAt(double x) const;

 private:
  double r_;
  double omega_;
  double q_;
};

}  // namespace qclab

#endif  // QCLAB_TWO_POINT_PROBLEM_H_
