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
#ifndef QCLAB_OPTIMIZER_H_
#define QCLAB_OPTIMIZER_H_

#include <cstdint>
#include <limits>
#include <string>

#include "qclab/clipping.h"
#include "qclab/param_vector.h"
#include "qclab/problem.h"
#include "qclab/run_trace.h"
#include "qclab/schedule.h"

namespace qclab {

enum class ClipMode { kQuantile, kConstant, kNone };

std::string ClipModeName(ClipMode mode);

struct ClipConfig {
  ClipMode mode = ClipMode::kNone;
  // Quantile mode only.
  QuantileSchedule quantiles = QuantileSchedule::Constant(0.5);
  ThresholdOptions threshold;
  // Constant mode only; +inf is allowed and disables clipping.
  double tau = std::numeric_limits<double>::infinity();

  static ClipConfig Quantile(QuantileSchedule quantiles,
                             ThresholdOptions threshold = {});
  static ClipConfig Constant(double tau);
  static ClipConfig None();
};

struct OptimizerConfig {
  ClipConfig clip;
  StepSchedule steps = StepSchedule::Constant(0.1);
  int64_t T = 1;
  ParamVector x0;
  uint64_t seed = 0;
  // Rows are kept for iterations t with t % trace_every == 0; T must be a
  // multiple of trace_every, giving T / trace_every rows.
  int64_t trace_every = 1;

  void Validate(const StochasticProblem& problem) const;
};

// x - gamma * alpha * g with alpha = ClipCoefficient(||g||, tau).
ParamVector QcSgdStep(const ParamVector& x, double gamma,
                      const ParamVector& grad_sample, double tau);

// Each iteration t: p_t from the schedule, tau_t from m fresh draws on the
// quantile_estimation stream (or the exact quantile), then one gradient draw
// on the data_sampling stream and the clipped step. Throws DivergenceError
// when an iterate becomes non-finite.
RunTrace RunQcSgd(const StochasticProblem& problem,
                  const OptimizerConfig& config);

// Fixed threshold tau(x) = tau.
RunTrace RunClippedSgd(const StochasticProblem& problem,
                       const OptimizerConfig& config);

// Unclipped x^{t+1} = x^t - gamma_t grad f_xi(x^t); config.clip is ignored.
RunTrace RunSgd(const StochasticProblem& problem,
                const OptimizerConfig& config);

// Dispatches on config.clip.mode.
RunTrace RunClippedFamily(const StochasticProblem& problem,
                          const OptimizerConfig& config);

// Largest admissible constant step (2p - beta - c) / (2L); requires
// beta, c in (0, 1) and beta + c < 2p.
double MaxStepSize(double p, double beta, double c, double smoothness);

}  // namespace qclab

#endif  // QCLAB_OPTIMIZER_H_
