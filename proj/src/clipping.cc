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
#include "qclab/clipping.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qclab/errors.h"

namespace qclab {

double ClipCoefficient(double grad_norm, double tau) {
  Require(grad_norm >= 0.0, "clip coefficient: gradient norm is negative");
  Require(tau >= 0.0, "clip coefficient: tau is negative");
  if (grad_norm == 0.0 || tau >= grad_norm) return 1.0;
  return tau / grad_norm;
}

int64_t QuantileRank(int64_t m, double p) {
  Require(m >= 1, "empirical quantile: empty sample");
  Require(p > 0.0 && p < 1.0, "empirical quantile: p must lie in (0, 1)");
  // The relative nudge absorbs representation error in p (0.7 * 10 is
  // 7.000000000000001 in binary floating point).
  const double scaled = p * static_cast<double>(m) * (1.0 - 1e-12);
  const int64_t k = static_cast<int64_t>(std::ceil(scaled));
  return std::clamp<int64_t>(k, 1, m);
}

double EmpiricalQuantileInPlace(std::span<double> norms, double p) {
  const int64_t k = QuantileRank(static_cast<int64_t>(norms.size()), p);
  auto kth = norms.begin() + (k - 1);
  std::nth_element(norms.begin(), kth, norms.end());
  return *kth;
}

double EmpiricalQuantile(std::span<const double> norms, double p) {
  std::vector<double> copy(norms.begin(), norms.end());
  return EmpiricalQuantileInPlace(copy, p);
}

double ExactDiscreteQuantile(std::span<const NormAtom> atoms, double p) {
  Require(!atoms.empty(), "discrete quantile: no atoms");
  Require(p > 0.0 && p < 1.0, "discrete quantile: p must lie in (0, 1)");
  std::vector<NormAtom> sorted(atoms.begin(), atoms.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const NormAtom& a, const NormAtom& b) {
                     return a.value < b.value;
                   });
  double cumulative = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i].mass;
    // Equal values form one atom; only test the CDF at the last of them.
    if (i + 1 < sorted.size() && sorted[i + 1].value == sorted[i].value) {
      continue;
    }
    if (cumulative >= p) return sorted[i].value;
  }
  return sorted.back().value;
}

double ExactQuantileTwoPoint(double x, const TwoPointProblem& problem,
                             double p) {
  const std::vector<NormAtom> atoms = problem.NormAtomsAt(x);
  return ExactDiscreteQuantile(atoms, p);
}

std::string ThresholdSourceName(ThresholdSource source) {
  switch (source) {
    case ThresholdSource::kExactDiscrete:
      return "exact_discrete";
    case ThresholdSource::kEmpiricalOrderStatistic:
      return "empirical_order_statistic";
    case ThresholdSource::kConstant:
      return "constant";
  }
  return "unknown";
}

ThresholdEstimator::ThresholdEstimator(const StochasticProblem& problem,
                                       ThresholdOptions options)
    : problem_(problem), options_(options) {
  Require(options_.m >= 2, "threshold estimation: m must be at least 2");
  if (!options_.exact) norms_.resize(static_cast<std::size_t>(options_.m));
}

ThresholdEstimate ThresholdEstimator::Estimate(const ParamVector& x, double p,
                                               RngStream& rng) {
  Require(p > 0.0 && p < 1.0, "threshold estimation: p must lie in (0, 1)");
  ThresholdEstimate estimate;
  estimate.p = p;
  if (options_.exact) {
    const auto atoms = problem_.NormAtoms(x);
    Require(atoms.has_value(),
            "threshold estimation: exact quantile unavailable for " +
                problem_.Describe());
    estimate.tau = ExactDiscreteQuantile(*atoms, p);
    estimate.source = ThresholdSource::kExactDiscrete;
    estimate.m_used = 0;
    return estimate;
  }
  for (double& norm : norms_) {
    problem_.SampleGradientInto(x, rng, sample_);
    norm = sample_.Norm();
  }
  estimate.tau = EmpiricalQuantileInPlace(norms_, p);
  estimate.source = ThresholdSource::kEmpiricalOrderStatistic;
  estimate.m_used = options_.m;
  return estimate;
}

ThresholdEstimate EstimateThreshold(const StochasticProblem& problem,
                                    const ParamVector& x, double p,
                                    const ThresholdOptions& options,
                                    RngStream& rng) {
  ThresholdEstimator estimator(problem, options);
  return estimator.Estimate(x, p, rng);
}

double TauUpperBound(double grad_norm, double sigma_q, double p, double q) {
  Require(p > 0.0 && p < 1.0, "tau bound: p must lie in (0, 1)");
  Require(q > 1.0 && q <= 2.0, "tau bound: q must lie in (1, 2]");
  return grad_norm + sigma_q * std::pow(1.0 - p, -1.0 / q);
}

double BiasUpperBound(double sigma_q, double p, double q) {
  Require(p > 0.0 && p < 1.0, "bias bound: p must lie in (0, 1)");
  Require(q > 1.0 && q <= 2.0, "bias bound: q must lie in (1, 2]");
  return sigma_q * std::pow(1.0 - p, 1.0 - 1.0 / q);
}

BiasEstimate EmpiricalBias(const StochasticProblem& problem,
                           const ParamVector& x, double p, int64_t n_samples,
                           const ThresholdOptions& options, RngStream& rng) {
  Require(n_samples >= kMinBiasSamples,
          "empirical bias: n_samples must be at least 10^4");
  RequireFiniteVector(x, problem.dim(), "empirical bias point");
  const ThresholdEstimate threshold =
      EstimateThreshold(problem, x, p, options, rng);
  const ParamVector exact = problem.ExactGradient(x);
  const std::size_t d = problem.dim();

  std::vector<double> sum(d, 0.0);
  std::vector<double> sum_sq(d, 0.0);
  double alpha_sum = 0.0;
  double alpha_sum_sq = 0.0;
  ParamVector sample;
  for (int64_t i = 0; i < n_samples; ++i) {
    problem.SampleGradientInto(x, rng, sample);
    const double alpha = ClipCoefficient(sample.Norm(), threshold.tau);
    alpha_sum += alpha;
    alpha_sum_sq += alpha * alpha;
    for (std::size_t k = 0; k < d; ++k) {
      const double y = alpha * (sample[k] - exact[k]);
      sum[k] += y;
      sum_sq[k] += y * y;
    }
  }

  const double n = static_cast<double>(n_samples);
  BiasEstimate result;
  result.tau = threshold.tau;
  double mean_sq_norm = 0.0;
  double variance_total = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double mean = sum[k] / n;
    mean_sq_norm += mean * mean;
    variance_total += std::max(0.0, (sum_sq[k] / n - mean * mean) * n / (n - 1));
  }
  result.bias_norm = std::sqrt(mean_sq_norm);
  result.bias_stderr = std::sqrt(variance_total / n);
  result.alpha_bar = alpha_sum / n;
  const double alpha_var = std::max(
      0.0, (alpha_sum_sq / n - result.alpha_bar * result.alpha_bar) * n /
               (n - 1));
  result.alpha_bar_stderr = std::sqrt(alpha_var / n);
  return result;
}

}  // namespace qclab
