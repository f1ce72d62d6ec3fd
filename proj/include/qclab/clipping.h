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
#ifndef QCLAB_CLIPPING_H_
#define QCLAB_CLIPPING_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qclab/param_vector.h"
#include "qclab/problem.h"
#include "qclab/rng.h"
#include "qclab/two_point_problem.h"

namespace qclab {

inline constexpr int kDefaultThresholdSamples = 512;

// min(1, tau / grad_norm). A zero gradient is left unchanged (coefficient 1)
// and tau = 0 zeroes every non-zero gradient.
double ClipCoefficient(double grad_norm, double tau);

// k-th smallest element with k = max(1, ceil(p * m)). Ties are harmless: the
// returned value is the same whichever tied element sits at position k.
double EmpiricalQuantile(std::span<const double> norms, double p);
// Same, but partially reorders `norms` instead of copying.
double EmpiricalQuantileInPlace(std::span<double> norms, double p);
// The order-statistic index k used above (1-based).
int64_t QuantileRank(int64_t m, double p);

// Generalized inverse CDF of a discrete distribution: the smallest atom value
// v with P(value <= v) >= p.
double ExactDiscreteQuantile(std::span<const NormAtom> atoms, double p);
double ExactQuantileTwoPoint(double x, const TwoPointProblem& problem,
                             double p);

enum class ThresholdSource { kExactDiscrete, kEmpiricalOrderStatistic, kConstant };

std::string ThresholdSourceName(ThresholdSource source);

struct ThresholdEstimate {
  double tau = 0.0;
  double p = 0.0;
  ThresholdSource source = ThresholdSource::kConstant;
  int m_used = 0;
};

struct ThresholdOptions {
  int m = kDefaultThresholdSamples;
  // Use the exact quantile when the problem exposes a discrete norm
  // distribution (two-point example, noiseless quadratic).
  bool exact = false;
};

// Estimates tau(x), the p-quantile of ||grad f_xi(x)||, from m fresh draws.
// Holds scratch buffers so the per-iteration call does not allocate.
class ThresholdEstimator {
 public:
  ThresholdEstimator(const StochasticProblem& problem, ThresholdOptions options);

  ThresholdEstimate Estimate(const ParamVector& x, double p, RngStream& rng);

 private:
  const StochasticProblem& problem_;
  ThresholdOptions options_;
  std::vector<double> norms_;
  ParamVector sample_;
};

ThresholdEstimate EstimateThreshold(const StochasticProblem& problem,
                                    const ParamVector& x, double p,
                                    const ThresholdOptions& options,
                                    RngStream& rng);

// ||grad f(x)|| + sigma_q (1 - p)^(-1/q).
double TauUpperBound(double grad_norm, double sigma_q, double p, double q);
// sigma_q (1 - p)^(1 - 1/q).
double BiasUpperBound(double sigma_q, double p, double q);

struct BiasEstimate {
  // ||E[alpha g] - alpha_bar grad f||, estimated as the norm of the sample
  // mean of alpha_i (g_i - grad f).
  double bias_norm = 0.0;
  // sqrt(sum_k Var_k / n) over coordinates of alpha_i (g_i - grad f).
  double bias_stderr = 0.0;
  double alpha_bar = 1.0;
  double alpha_bar_stderr = 0.0;
  double tau = 0.0;
};

inline constexpr int64_t kMinBiasSamples = 10000;

// Monte Carlo estimate of the clipping bias at x with a threshold from
// EstimateThreshold() (drawn first from the same stream).
BiasEstimate EmpiricalBias(const StochasticProblem& problem,
                           const ParamVector& x, double p, int64_t n_samples,
                           const ThresholdOptions& options, RngStream& rng);

}  // namespace qclab

#endif  // QCLAB_CLIPPING_H_
