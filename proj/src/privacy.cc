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
#include "qclab/privacy.h"

#include <cmath>
#include <sstream>

#include "qclab/clipping.h"
#include "qclab/errors.h"

namespace qclab {
namespace {

// Adds one B-sample clipped mean plus noise into `out`. Shared by the probe
// API and the run loop so both follow the same stream order.
void FillDpGradient(const StochasticProblem& problem, const ParamVector& x,
                    double tau, int64_t B, double sigma_dp,
                    RngStream& data_rng, RngStream& noise_rng,
                    ParamVector& sample, DpGradient& out) {
  const std::size_t d = problem.dim();
  out.clipped_mean.Reset(d);
  out.noise.Reset(d);
  out.direction.Reset(d);
  double alpha_sum = 0.0;
  out.any_clipped = false;
  for (int64_t j = 0; j < B; ++j) {
    problem.SampleGradientInto(x, data_rng, sample);
    const double alpha = ClipCoefficient(sample.Norm(), tau);
    alpha_sum += alpha;
    if (alpha < 1.0) out.any_clipped = true;
    for (std::size_t k = 0; k < d; ++k) {
      const double clipped = alpha * sample[k];
      out.clipped_mean[k] += clipped;
    }
  }
  const double batch = static_cast<double>(B);
  for (std::size_t k = 0; k < d; ++k) out.clipped_mean[k] /= batch;
  out.mean_alpha = alpha_sum / batch;

  out.noise_scale = tau * sigma_dp;
  for (std::size_t k = 0; k < d; ++k) {
    out.noise[k] = out.noise_scale * noise_rng.Normal();
  }
  for (std::size_t k = 0; k < d; ++k) {
    // A zero noise scale leaves the direction bit-identical to the mean.
    out.direction[k] = out.noise_scale == 0.0
                           ? out.clipped_mean[k]
                           : out.clipped_mean[k] + out.noise[k];
  }
}

}  // namespace

double SigmaDp(double epsilon, double delta, int64_t T, double C) {
  Require(std::isfinite(epsilon) && epsilon > 0.0,
          "sigma_dp: epsilon must be positive");
  Require(delta > 0.0 && delta < 1.0, "sigma_dp: delta must lie in (0, 1)");
  Require(T >= 1, "sigma_dp: T must be at least 1");
  Require(std::isfinite(C) && C >= 0.0, "sigma_dp: C must be non-negative");
  return C * std::sqrt(static_cast<double>(T) * std::log(1.0 / delta)) /
         epsilon;
}

double BigS(int64_t B, double sigma_dp) {
  Require(B >= 1, "S: batch size must be at least 1");
  Require(sigma_dp >= 0.0, "S: sigma_dp must be non-negative");
  return 1.0 / static_cast<double>(B) + sigma_dp * sigma_dp;
}

double DpMaxStepSize(double p, double beta, double c, double smoothness,
                     double big_s) {
  Require(p > 0.0 && p < 1.0, "DP step-size bound: p must lie in (0, 1)");
  Require(beta > 0.0 && beta < 1.0,
          "DP step-size bound: beta must lie in (0, 1)");
  Require(c > 0.0 && c < 1.0, "DP step-size bound: c must lie in (0, 1)");
  Require(smoothness > 0.0, "DP step-size bound: L must be positive");
  Require(big_s > 0.0, "DP step-size bound: S must be positive");
  Require(beta / 2.0 + c < p,
          "DP step-size bound: need beta/2 + c < p for a positive step");
  return (p - beta / 2.0 - c) / (2.0 * smoothness * big_s);
}

double DpConfig::sigma_dp() const {
  if (override_sigma_dp.has_value()) return *override_sigma_dp;
  return SigmaDp(epsilon, delta, T, C);
}

void DpConfig::Validate() const {
  Require(B >= 1, "dp: B must be at least 1");
  if (override_sigma_dp.has_value()) {
    Require(std::isfinite(*override_sigma_dp) && *override_sigma_dp >= 0.0,
            "dp: sigma_dp override must be finite and non-negative");
  } else {
    (void)SigmaDp(epsilon, delta, T, C);
  }
}

DpGradient SampleDpGradient(const StochasticProblem& problem,
                            const ParamVector& x, double tau, int64_t B,
                            double sigma_dp, RngStream& data_rng,
                            RngStream& noise_rng) {
  Require(B >= 1, "DP gradient: B must be at least 1");
  Require(tau >= 0.0, "DP gradient: tau must be non-negative");
  Require(sigma_dp >= 0.0, "DP gradient: sigma_dp must be non-negative");
  RequireFiniteVector(x, problem.dim(), "DP gradient point");
  DpGradient out;
  ParamVector sample;
  FillDpGradient(problem, x, tau, B, sigma_dp, data_rng, noise_rng, sample,
                 out);
  return out;
}

RunTrace RunDpQcSgd(const StochasticProblem& problem,
                    const OptimizerConfig& config, const DpConfig& dp) {
  config.Validate(problem);
  dp.Validate();
  Require(config.clip.mode == ClipMode::kQuantile,
          "RunDpQcSgd: clip mode must be quantile");
  const double sigma_dp = dp.sigma_dp();

  RngStream data_rng(config.seed, StreamId::kDataSampling);
  RngStream noise_rng(config.seed, StreamId::kDpNoise);
  RngStream quantile_rng(config.seed, StreamId::kQuantileEstimation);
  ThresholdEstimator estimator(problem, config.clip.threshold);

  RunTrace trace;
  trace.rows.reserve(static_cast<std::size_t>(config.T / config.trace_every));
  ParamVector x = config.x0;
  ParamVector exact;
  ParamVector sample;
  DpGradient gradient;
  for (int64_t t = 0; t < config.T; ++t) {
    TraceRow row;
    row.iter = t;
    row.gamma = config.steps.At(t);
    row.p = config.clip.quantiles.At(t);
    row.tau = estimator.Estimate(x, row.p, quantile_rng).tau;
    problem.ExactGradientInto(x, exact);
    row.f = problem.Value(x);
    row.grad_norm_sq = exact.SquaredNorm();
    row.x_norm = x.Norm();

    FillDpGradient(problem, x, row.tau, dp.B, sigma_dp, data_rng, noise_rng,
                   sample, gradient);
    row.alpha = gradient.mean_alpha;
    row.clipped = gradient.any_clipped;
    row.noise_scale = gradient.noise_scale;
    for (std::size_t k = 0; k < x.dim(); ++k) {
      x[k] -= row.gamma * gradient.direction[k];
    }
    trace.Add(row, t % config.trace_every == 0);
    if (!x.AllFinite()) {
      std::ostringstream msg;
      msg << "DP iterate became non-finite at iteration " << t
          << " (gamma=" << row.gamma << ", tau=" << row.tau
          << ", noise_scale=" << row.noise_scale << ")";
      throw DivergenceError(t, msg.str());
    }
  }
  trace.final_f = problem.Value(x);
  trace.final_x = std::move(x);
  return trace;
}

}  // namespace qclab
