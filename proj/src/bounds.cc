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
#include "qclab/bounds.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qclab/errors.h"
#include "qclab/optimizer.h"
#include "qclab/privacy.h"

namespace qclab {
namespace {

// Relative tolerance when comparing a step against its admissible maximum,
// so a step set exactly to the maximum is not rejected by rounding.
constexpr double kStepTolerance = 1e-12;

void RequireStep(double gamma, double max_gamma, int64_t t, const char* what) {
  if (gamma <= max_gamma * (1.0 + kStepTolerance)) return;
  std::ostringstream msg;
  msg << what << ": gamma_" << t << " = " << gamma
      << " exceeds the admissible maximum " << max_gamma;
  throw InvalidArgumentError(msg.str());
}

}  // namespace

void BoundInputs::Validate() const {
  Require(std::isfinite(f0_gap) && f0_gap >= 0.0,
          "bounds: F0 must be finite and non-negative");
  Require(smoothness > 0.0, "bounds: L must be positive");
  Require(std::isfinite(sigma_q) && sigma_q >= 0.0,
          "bounds: sigma_q must be finite and non-negative");
  Require(q > 1.0 && q <= 2.0, "bounds: q must lie in (1, 2]");
  Require(beta > 0.0 && beta < 1.0, "bounds: beta must lie in (0, 1)");
  Require(c > 0.0 && c < 1.0, "bounds: c must lie in (0, 1)");
  Require(T >= 1, "bounds: T must be at least 1");
  Require(B >= 1, "bounds: B must be at least 1");
  Require(sigma_dp >= 0.0, "bounds: sigma_dp must be non-negative");
}

double RhsTheorem1(const BoundInputs& inputs, const StepSchedule& steps,
                   const QuantileSchedule& quantiles) {
  inputs.Validate();
  const double L = inputs.smoothness;
  const double sigma_sq = inputs.sigma_q * inputs.sigma_q;
  double gamma_sum = 0.0;
  double noise_sum = 0.0;
  for (int64_t t = 0; t < inputs.T; ++t) {
    const double gamma = steps.At(t);
    const double p = quantiles.At(t);
    RequireStep(gamma, MaxStepSize(p, inputs.beta, inputs.c, L), t,
                "theorem-1 bound");
    const double h = 1.0 - p;
    gamma_sum += gamma;
    noise_sum += gamma * std::pow(h, -2.0 / inputs.q) *
                 (2.0 * L * gamma + h * h / inputs.beta);
  }
  return 2.0 * inputs.f0_gap / gamma_sum + sigma_sq * noise_sum / gamma_sum;
}

BoundTerms RhsCorollary1(const BoundInputs& inputs) {
  inputs.Validate();
  const double L = inputs.smoothness;
  RequireStep(inputs.gamma, MaxStepSize(inputs.p, inputs.beta, inputs.c, L), 0,
              "corollary-1 bound");
  Require(inputs.gamma > 0.0, "corollary-1 bound: gamma must be positive");
  const double h = 1.0 - inputs.p;
  const double sigma_sq = inputs.sigma_q * inputs.sigma_q;
  BoundTerms terms;
  terms.optimization =
      2.0 * inputs.f0_gap / (inputs.gamma * static_cast<double>(inputs.T));
  terms.variance =
      2.0 * inputs.gamma * L * sigma_sq * std::pow(h, -2.0 / inputs.q);
  terms.bias = sigma_sq * std::pow(h, 2.0 - 2.0 / inputs.q) / inputs.beta;
  terms.total = terms.optimization + terms.variance + terms.bias;
  return terms;
}

double RhsTheorem2(const BoundInputs& inputs, const StepSchedule& steps,
                   const QuantileSchedule& quantiles) {
  inputs.Validate();
  const double L = inputs.smoothness;
  const double big_s = BigS(inputs.B, inputs.sigma_dp);
  const double sigma_sq = inputs.sigma_q * inputs.sigma_q;
  double gamma_sum = 0.0;
  double noise_sum = 0.0;
  for (int64_t t = 0; t < inputs.T; ++t) {
    const double gamma = steps.At(t);
    const double p = quantiles.At(t);
    RequireStep(gamma, DpMaxStepSize(p, inputs.beta, inputs.c, L, big_s), t,
                "theorem-2 bound");
    const double h = 1.0 - p;
    gamma_sum += gamma;
    noise_sum += gamma * std::pow(h, -2.0 / inputs.q) *
                 (2.0 * gamma * L * big_s + h * h / (2.0 * inputs.beta));
  }
  return inputs.f0_gap / gamma_sum + sigma_sq * noise_sum / gamma_sum;
}

double RhsTheorem2(const BoundInputs& inputs) {
  return RhsTheorem2(inputs, StepSchedule::Constant(inputs.gamma),
                     QuantileSchedule::Constant(inputs.p));
}

BoundTerms RhsTheorem2Terms(const BoundInputs& inputs) {
  inputs.Validate();
  const double L = inputs.smoothness;
  const double big_s = BigS(inputs.B, inputs.sigma_dp);
  RequireStep(inputs.gamma,
              DpMaxStepSize(inputs.p, inputs.beta, inputs.c, L, big_s), 0,
              "theorem-2 bound");
  Require(inputs.gamma > 0.0, "theorem-2 bound: gamma must be positive");
  const double h = 1.0 - inputs.p;
  const double sigma_sq = inputs.sigma_q * inputs.sigma_q;
  BoundTerms terms;
  terms.optimization =
      inputs.f0_gap / (inputs.gamma * static_cast<double>(inputs.T));
  terms.variance = 2.0 * inputs.gamma * L * big_s * sigma_sq *
                   std::pow(h, -2.0 / inputs.q);
  terms.bias =
      sigma_sq * std::pow(h, 2.0 - 2.0 / inputs.q) / (2.0 * inputs.beta);
  terms.total = terms.optimization + terms.variance + terms.bias;
  return terms;
}

double RhsFixedClipping(double f0_gap, double gamma, int64_t T, double tau,
                        double smoothness, double sigma) {
  Require(f0_gap >= 0.0 && gamma > 0.0 && T >= 1 && tau > 0.0 &&
              smoothness > 0.0 && sigma >= 0.0,
          "fixed-clipping bound: inputs must be positive");
  const double horizon = gamma * static_cast<double>(T);
  const double sigma_sq = sigma * sigma;
  double clip_term = sigma_sq;
  if (std::isinf(tau)) {
    clip_term = 0.0;
  } else {
    clip_term = std::min(sigma_sq, sigma_sq * sigma_sq / (tau * tau));
  }
  const double startup = std::isinf(tau) ? 0.0 : f0_gap / (horizon * tau);
  return startup * startup + f0_gap / horizon + gamma * smoothness * sigma_sq +
         clip_term;
}

}  // namespace qclab
