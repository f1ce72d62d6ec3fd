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
#ifndef QCLAB_BOUNDS_H_
#define QCLAB_BOUNDS_H_

#include <cstdint>

#include "qclab/schedule.h"

namespace qclab {

// Constants entering the convergence bounds.
struct BoundInputs {
  double f0_gap = 0.0;  // f(x^0) - f_inf
  double smoothness = 1.0;
  double sigma_q = 0.0;
  double q = 2.0;
  double p = 0.5;  // constant quantile; h = 1 - p
  double beta = 0.5;
  double c = 0.5;
  double gamma = 0.1;  // constant step
  int64_t T = 1;
  int64_t B = 1;          // DP only
  double sigma_dp = 0.0;  // DP only

  void Validate() const;
};

// Weighted-average bound for QC-SGD with arbitrary step and quantile
// schedules:
//   2 F0 / Gamma_T
//   + (sigma_q^2 / Gamma_T) sum_t gamma_t h_t^(-2/q) (2 L gamma_t
//                                                     + h_t^2 / beta).
// Uses inputs.f0_gap, smoothness, sigma_q, q, beta, c, T; rejects any t with
// gamma_t > (2 p_t - beta - c) / (2L).
double RhsTheorem1(const BoundInputs& inputs, const StepSchedule& steps,
                   const QuantileSchedule& quantiles);

// Constant-parameter bound split into its three terms.
struct BoundTerms {
  double optimization = 0.0;  // decays with gamma T
  double variance = 0.0;      // grows with gamma
  double bias = 0.0;          // independent of gamma and T
  double total = 0.0;
};

// Constant gamma and p. Compare against (c/T) sum ||grad f||^2.
//   optimization = 2 F0 / (gamma T)
//   variance     = 2 gamma L sigma_q^2 h^(-2/q)
//   bias         = sigma_q^2 h^(2 - 2/q) / beta
BoundTerms RhsCorollary1(const BoundInputs& inputs);

// DP-QC-SGD bound:
//   F0 / Gamma_T
//   + (sigma_q^2 / Gamma_T) sum_t gamma_t h_t^(-2/q) (2 gamma_t L S
//                                                     + h_t^2 / (2 beta))
// with S = 1/B + sigma_dp^2; rejects gamma_t > (p_t - beta/2 - c)/(2 L S).
double RhsTheorem2(const BoundInputs& inputs, const StepSchedule& steps,
                   const QuantileSchedule& quantiles);
// Constant gamma and p taken from `inputs`.
double RhsTheorem2(const BoundInputs& inputs);
// Same, split as F0 / (gamma T), 2 gamma L S sigma_q^2 h^(-2/q) and
// sigma_q^2 h^(2 - 2/q) / (2 beta).
BoundTerms RhsTheorem2Terms(const BoundInputs& inputs);

// Order-constant-free comparator for SGD with a fixed clipping threshold:
//   (F0 / (gamma T tau))^2 + F0 / (gamma T) + gamma L sigma^2
//   + min(sigma^2, sigma^4 / tau^2).
double RhsFixedClipping(double f0_gap, double gamma, int64_t T, double tau,
                        double smoothness, double sigma);

}  // namespace qclab

#endif  // QCLAB_BOUNDS_H_
