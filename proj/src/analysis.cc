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
#include "qclab/analysis.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qclab/errors.h"

namespace qclab {

double Lemma2Rhs(double f_x, double grad_norm_sq, double alpha_bar,
                 double gamma, double p, double beta, double smoothness,
                 double sigma_q, double q) {
  Require(gamma > 0.0, "lemma 2: gamma must be positive");
  Require(p > 0.0 && p < 1.0, "lemma 2: p must lie in (0, 1)");
  Require(beta > 0.0, "lemma 2: beta must be positive");
  Require(q > 1.0 && q <= 2.0, "lemma 2: q must lie in (1, 2]");
  const double h = 1.0 - p;
  const double sigma_sq = sigma_q * sigma_q;
  return f_x -
         gamma * (alpha_bar - beta / 2.0 - gamma * smoothness) * grad_norm_sq +
         0.5 * gamma * sigma_sq * std::pow(h, 2.0 - 2.0 / q) / beta +
         gamma * gamma * smoothness * sigma_sq * std::pow(h, -2.0 / q);
}

Lemma2Result Lemma2Check(const StochasticProblem& problem,
                         const ParamVector& x, double gamma, double p,
                         double beta, int64_t n_mc,
                         const ThresholdOptions& threshold, RngStream& rng) {
  Require(n_mc >= kMinLemma2Samples, "lemma 2: n_mc must be at least 10^5");
  RequireFiniteVector(x, problem.dim(), "lemma 2 state");
  const ProblemConstants constants = problem.constants();
  const double sigma_q = problem.SigmaQ();

  Lemma2Result result;
  result.tau = EstimateThreshold(problem, x, p, threshold, rng).tau;
  const ParamVector exact = problem.ExactGradient(x);

  double sum = 0.0;
  double sum_sq = 0.0;
  double alpha_sum = 0.0;
  ParamVector sample;
  ParamVector next(x.dim());
  for (int64_t i = 0; i < n_mc; ++i) {
    problem.SampleGradientInto(x, rng, sample);
    const double alpha = ClipCoefficient(sample.Norm(), result.tau);
    alpha_sum += alpha;
    for (std::size_t k = 0; k < x.dim(); ++k) {
      next[k] = x[k] - gamma * (alpha * sample[k]);
    }
    const double value = problem.Value(next);
    sum += value;
    sum_sq += value * value;
  }
  const double n = static_cast<double>(n_mc);
  result.lhs = sum / n;
  const double variance =
      std::max(0.0, (sum_sq / n - result.lhs * result.lhs) * n / (n - 1.0));
  result.lhs_stderr = std::sqrt(variance / n);
  result.alpha_bar = alpha_sum / n;
  result.rhs = Lemma2Rhs(problem.Value(x), exact.SquaredNorm(),
                         result.alpha_bar, gamma, p, beta,
                         constants.smoothness, sigma_q, constants.q);
  result.margin = result.rhs - result.lhs;
  return result;
}

Lemma2Result Lemma2CheckExactTwoPoint(const TwoPointProblem& problem, double x,
                                      double gamma, double p, double beta) {
  const ProblemConstants constants = problem.constants();
  Lemma2Result result;
  result.tau = ExactQuantileTwoPoint(x, problem, p);
  const double outcomes[2] = {x + problem.r(), x};
  const double masses[2] = {problem.omega(), 1.0 - problem.omega()};
  result.lhs = 0.0;
  result.alpha_bar = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double alpha = ClipCoefficient(std::abs(outcomes[i]), result.tau);
    const ParamVector next{x - gamma * alpha * outcomes[i]};
    result.lhs += masses[i] * problem.Value(next);
    result.alpha_bar += masses[i] * alpha;
  }
  const double grad = problem.GradientAt(x);
  result.rhs = Lemma2Rhs(problem.Value(ParamVector{x}), grad * grad,
                         result.alpha_bar, gamma, p, beta,
                         constants.smoothness, *constants.sigma_q,
                         constants.q);
  result.margin = result.rhs - result.lhs;
  return result;
}

double ExpectedUpdateTwoPoint(double x, const TwoPointProblem& problem,
                              double p) {
  const double tau = ExactQuantileTwoPoint(x, problem, p);
  const double shifted = x + problem.r();
  const double alpha_shifted = ClipCoefficient(std::abs(shifted), tau);
  const double alpha_plain = ClipCoefficient(std::abs(x), tau);
  return problem.omega() * alpha_shifted * shifted +
         (1.0 - problem.omega()) * alpha_plain * x;
}

double FixedPointTwoPoint(const TwoPointProblem& problem, double p,
                          double lower, double upper) {
  Require(lower < upper, "fixed point: empty search interval");
  double f_lower = ExpectedUpdateTwoPoint(lower, problem, p);
  const double f_upper = ExpectedUpdateTwoPoint(upper, problem, p);
  if (f_lower == 0.0) return lower;
  if (f_upper == 0.0) return upper;
  if ((f_lower < 0.0) == (f_upper < 0.0)) {
    std::ostringstream msg;
    msg << "fixed point: no sign change of the expected update on [" << lower
        << ", " << upper << "]";
    throw InvalidArgumentError(msg.str());
  }
  while (upper - lower > kFixedPointTolerance) {
    const double mid = 0.5 * (lower + upper);
    const double f_mid = ExpectedUpdateTwoPoint(mid, problem, p);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lower < 0.0)) {
      lower = mid;
      f_lower = f_mid;
    } else {
      upper = mid;
    }
  }
  return 0.5 * (lower + upper);
}

double ClosedFormFixedPoint(double omega) {
  Require(omega > 0.5 && omega < 1.0,
          "closed-form fixed point: omega must lie in (1/2, 1)");
  return -omega / (1.0 - omega);
}

}  // namespace qclab
