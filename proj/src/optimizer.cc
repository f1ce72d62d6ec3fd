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
#include "qclab/optimizer.h"

#include <cmath>
#include <optional>
#include <sstream>

#include "qclab/errors.h"
#include "qclab/rng.h"

namespace qclab {
namespace {

double PColumn(const ClipConfig& clip, int64_t t) {
  switch (clip.mode) {
    case ClipMode::kQuantile:
      return clip.quantiles.At(t);
    case ClipMode::kConstant:
      return std::isinf(clip.tau) ? 1.0
                                  : std::numeric_limits<double>::quiet_NaN();
    case ClipMode::kNone:
      return 1.0;
  }
  return 1.0;
}

RunTrace RunLoop(const StochasticProblem& problem,
                 const OptimizerConfig& config, ClipMode mode) {
  config.Validate(problem);
  ClipConfig clip = config.clip;
  clip.mode = mode;

  RngStream data_rng(config.seed, StreamId::kDataSampling);
  RngStream quantile_rng(config.seed, StreamId::kQuantileEstimation);
  std::optional<ThresholdEstimator> estimator;
  if (mode == ClipMode::kQuantile) estimator.emplace(problem, clip.threshold);

  RunTrace trace;
  trace.rows.reserve(static_cast<std::size_t>(config.T / config.trace_every));
  ParamVector x = config.x0;
  ParamVector exact;
  ParamVector sample;
  for (int64_t t = 0; t < config.T; ++t) {
    TraceRow row;
    row.iter = t;
    row.gamma = config.steps.At(t);
    row.p = PColumn(clip, t);
    switch (mode) {
      case ClipMode::kQuantile:
        row.tau = estimator->Estimate(x, row.p, quantile_rng).tau;
        break;
      case ClipMode::kConstant:
        row.tau = clip.tau;
        break;
      case ClipMode::kNone:
        row.tau = std::numeric_limits<double>::infinity();
        break;
    }
    problem.ExactGradientInto(x, exact);
    row.f = problem.Value(x);
    row.grad_norm_sq = exact.SquaredNorm();
    row.x_norm = x.Norm();

    problem.SampleGradientInto(x, data_rng, sample);
    row.alpha = mode == ClipMode::kNone
                    ? 1.0
                    : ClipCoefficient(sample.Norm(), row.tau);
    row.clipped = row.alpha < 1.0;
    for (std::size_t k = 0; k < x.dim(); ++k) {
      const double clipped = row.alpha * sample[k];
      x[k] -= row.gamma * clipped;
    }
    trace.Add(row, t % config.trace_every == 0);
    if (!x.AllFinite()) {
      std::ostringstream msg;
      msg << "iterate became non-finite at iteration " << t
          << " (gamma=" << row.gamma << ", tau=" << row.tau << ")";
      throw DivergenceError(t, msg.str());
    }
  }
  trace.final_f = problem.Value(x);
  trace.final_x = std::move(x);
  return trace;
}

}  // namespace

std::string ClipModeName(ClipMode mode) {
  switch (mode) {
    case ClipMode::kQuantile:
      return "quantile";
    case ClipMode::kConstant:
      return "constant";
    case ClipMode::kNone:
      return "none";
  }
  return "unknown";
}

ClipConfig ClipConfig::Quantile(QuantileSchedule quantiles,
                                ThresholdOptions threshold) {
  ClipConfig clip;
  clip.mode = ClipMode::kQuantile;
  clip.quantiles = quantiles;
  clip.threshold = threshold;
  return clip;
}

ClipConfig ClipConfig::Constant(double tau) {
  ClipConfig clip;
  clip.mode = ClipMode::kConstant;
  clip.tau = tau;
  return clip;
}

ClipConfig ClipConfig::None() { return ClipConfig{}; }

void OptimizerConfig::Validate(const StochasticProblem& problem) const {
  Require(T >= 1, "optimizer: T must be at least 1");
  Require(trace_every >= 1, "optimizer: trace_every must be at least 1");
  Require(T % trace_every == 0,
          "optimizer: T must be a multiple of trace_every");
  RequireFiniteVector(x0, problem.dim(), "optimizer x0");
  if (clip.mode == ClipMode::kQuantile) {
    Require(clip.threshold.m >= 2, "optimizer: threshold m must be >= 2");
  }
  if (clip.mode == ClipMode::kConstant) {
    Require(clip.tau >= 0.0 && !std::isnan(clip.tau),
            "optimizer: constant tau must be non-negative");
  }
}

ParamVector QcSgdStep(const ParamVector& x, double gamma,
                      const ParamVector& grad_sample, double tau) {
  Require(gamma > 0.0, "QC-SGD step: gamma must be positive");
  Require(tau >= 0.0, "QC-SGD step: tau must be non-negative");
  Require(x.dim() == grad_sample.dim(), "QC-SGD step: dimension mismatch");
  const double alpha = ClipCoefficient(grad_sample.Norm(), tau);
  ParamVector next = x;
  for (std::size_t k = 0; k < next.dim(); ++k) {
    const double clipped = alpha * grad_sample[k];
    next[k] -= gamma * clipped;
  }
  return next;
}

RunTrace RunQcSgd(const StochasticProblem& problem,
                  const OptimizerConfig& config) {
  Require(config.clip.mode == ClipMode::kQuantile,
          "RunQcSgd: clip mode must be quantile");
  return RunLoop(problem, config, ClipMode::kQuantile);
}

RunTrace RunClippedSgd(const StochasticProblem& problem,
                       const OptimizerConfig& config) {
  Require(config.clip.mode == ClipMode::kConstant,
          "RunClippedSgd: clip mode must be constant");
  return RunLoop(problem, config, ClipMode::kConstant);
}

RunTrace RunSgd(const StochasticProblem& problem,
                const OptimizerConfig& config) {
  return RunLoop(problem, config, ClipMode::kNone);
}

RunTrace RunClippedFamily(const StochasticProblem& problem,
                          const OptimizerConfig& config) {
  return RunLoop(problem, config, config.clip.mode);
}

double MaxStepSize(double p, double beta, double c, double smoothness) {
  Require(p > 0.0 && p < 1.0, "step-size bound: p must lie in (0, 1)");
  Require(beta > 0.0 && beta < 1.0, "step-size bound: beta must lie in (0, 1)");
  Require(c > 0.0 && c < 1.0, "step-size bound: c must lie in (0, 1)");
  Require(smoothness > 0.0, "step-size bound: L must be positive");
  Require(beta + c < 2.0 * p,
          "step-size bound: need beta + c < 2p for a positive step");
  return (2.0 * p - beta - c) / (2.0 * smoothness);
}

}  // namespace qclab
