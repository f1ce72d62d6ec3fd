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
#ifndef QCLAB_PRIVACY_H_
#define QCLAB_PRIVACY_H_

#include <cstdint>
#include <optional>

#include "qclab/optimizer.h"
#include "qclab/param_vector.h"
#include "qclab/problem.h"
#include "qclab/rng.h"
#include "qclab/run_trace.h"

namespace qclab {

inline constexpr double kDefaultDpCalibration = 2.0;

// Noise multiplier C * sqrt(T ln(1/delta)) / epsilon (natural log).
//
// This is the calibration shape of the Gaussian mechanism only. C is not
// derived from an accountant, so the result is not a certified privacy
// guarantee.
double SigmaDp(double epsilon, double delta, int64_t T, double C);

// 1/B + sigma_dp^2.
double BigS(int64_t B, double sigma_dp);

// (p - beta/2 - c) / (2 L S); requires beta, c in (0, 1) and
// beta/2 + c < p.
double DpMaxStepSize(double p, double beta, double c, double smoothness,
                     double big_s);

struct DpConfig {
  int64_t B = 1;
  double epsilon = 1.0;
  double delta = 1e-5;
  int64_t T = 1;
  double C = kDefaultDpCalibration;
  std::optional<double> override_sigma_dp;

  // override_sigma_dp when set, SigmaDp(epsilon, delta, T, C) otherwise.
  double sigma_dp() const;
  void Validate() const;
};

// One noisy mini-batch gradient at x with a given threshold.
struct DpGradient {
  ParamVector clipped_mean;  // (1/B) sum_j alpha_j g_j
  ParamVector noise;         // z ~ N(0, (tau sigma_dp)^2 I)
  ParamVector direction;     // clipped_mean + noise
  double mean_alpha = 1.0;
  bool any_clipped = false;
  double noise_scale = 0.0;
};

// Draws B gradients from `data_rng`, clips each at tau, averages, then adds
// a single Gaussian vector drawn from `noise_rng`. The noise enters once,
// so its variance after averaging is (tau sigma_dp)^2, not divided by B.
DpGradient SampleDpGradient(const StochasticProblem& problem,
                            const ParamVector& x, double tau, int64_t B,
                            double sigma_dp, RngStream& data_rng,
                            RngStream& noise_rng);

// DP-QC-SGD. Per iteration: tau_t from the quantile_estimation stream, B
// draws from data_sampling, one noise vector from dp_noise, then
// x^{t+1} = x^t - gamma_t (mean clipped gradient + z^t). With sigma_dp = 0
// and B = 1 the iterates match RunQcSgd bit for bit.
RunTrace RunDpQcSgd(const StochasticProblem& problem,
                    const OptimizerConfig& config, const DpConfig& dp);

}  // namespace qclab

#endif  // QCLAB_PRIVACY_H_
