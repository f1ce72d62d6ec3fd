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
#include "qclab/problem.h"

#include "qclab/errors.h"

namespace qclab {

ParamVector StochasticProblem::ExactGradient(const ParamVector& x) const {
  ParamVector out;
  ExactGradientInto(x, out);
  return out;
}

ParamVector StochasticProblem::SampleGradient(const ParamVector& x,
                                              RngStream& rng) const {
  ParamVector out;
  SampleGradientInto(x, rng, out);
  return out;
}

double StochasticProblem::SigmaQ() const {
  const ProblemConstants c = constants();
  Require(c.sigma_q.has_value(),
          Describe() + ": sigma_q is unknown; calibrate it first");
  return *c.sigma_q;
}

ParamVector FiniteDifferenceGradient(const StochasticProblem& problem,
                                     const ParamVector& x, double epsilon) {
  Require(epsilon > 0.0, "finite difference: epsilon must be positive");
  RequireFiniteVector(x, problem.dim(), "finite difference point");
  ParamVector grad(x.dim());
  ParamVector probe = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    probe[i] = x[i] + epsilon;
    const double forward = problem.Value(probe);
    probe[i] = x[i] - epsilon;
    const double backward = problem.Value(probe);
    probe[i] = x[i];
    grad[i] = (forward - backward) / (2.0 * epsilon);
  }
  return grad;
}

}  // namespace qclab
