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
#ifndef QCLAB_PROBLEM_H_
#define QCLAB_PROBLEM_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qclab/param_vector.h"
#include "qclab/rng.h"

namespace qclab {

// Known constants of a synthetic objective.
struct ProblemConstants {
  double smoothness = 0.0;  // L
  double q = 2.0;           // order of the bounded noise moment, in (1, 2]
  // (E||grad f_xi(x) - grad f(x)||^q)^(1/q) upper bound. Unset until
  // calibrated for noise models without a closed form.
  std::optional<double> sigma_q;
  double f_inf = 0.0;
};

// One atom of a discrete gradient-norm distribution.
struct NormAtom {
  double value;
  double mass;
};

// f(x) = E_xi[f_xi(x)] with exact and sampled gradients. Implementations are
// immutable; all randomness comes from the caller's stream.
class StochasticProblem {
 public:
  virtual ~StochasticProblem() = default;

  virtual std::size_t dim() const = 0;
  virtual double Value(const ParamVector& x) const = 0;
  // Writes grad f(x) into `out` (resized to dim()).
  virtual void ExactGradientInto(const ParamVector& x,
                                 ParamVector& out) const = 0;
  // Writes one draw of grad f_xi(x) into `out` (resized to dim()).
  virtual void SampleGradientInto(const ParamVector& x, RngStream& rng,
                                  ParamVector& out) const = 0;
  virtual ProblemConstants constants() const = 0;
  virtual ParamVector Minimizer() const = 0;
  virtual std::string Describe() const = 0;

  // Exact distribution of ||grad f_xi(x)|| when it is finitely supported.
  virtual std::optional<std::vector<NormAtom>> NormAtoms(
      const ParamVector& x) const {
    (void)x;
    return std::nullopt;
  }

  // Analytic existence of E||grad f_xi(x) - grad f(x)||^order.
  virtual bool NoiseMomentFinite(double order) const {
    (void)order;
    return true;
  }

  ParamVector ExactGradient(const ParamVector& x) const;
  ParamVector SampleGradient(const ParamVector& x, RngStream& rng) const;
  // constants().sigma_q, or InvalidArgumentError when uncalibrated.
  double SigmaQ() const;
};

// Central-difference gradient of Value(); an oracle independent of
// ExactGradientInto().
ParamVector FiniteDifferenceGradient(const StochasticProblem& problem,
                                     const ParamVector& x, double epsilon);

}  // namespace qclab

#endif  // QCLAB_PROBLEM_H_
