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
#ifndef QCLAB_ANALYSIS_H_
#define QCLAB_ANALYSIS_H_

#include <cstdint>

#include "qclab/clipping.h"
#include "qclab/param_vector.h"
#include "qclab/problem.h"
#include "qclab/rng.h"
#include "qclab/two_point_problem.h"

namespace qclab {

inline constexpr int64_t kMinLemma2Samples = 100000;

// One-step descent check at a fixed state x:
//   E[f(x - gamma g) | x] <= f(x) - gamma (alpha_bar - beta/2 - gamma L)
//                                   ||grad f(x)||^2
//                           + (gamma/2) sigma_q^2 h^(2 - 2/q) / beta
//                           + gamma^2 L sigma_q^2 h^(-2/q).
struct Lemma2Result {
  double lhs = 0.0;
  double lhs_stderr = 0.0;  // zero for exact enumeration
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double alpha_bar = 1.0;
  double tau = 0.0;
};

// Monte Carlo: tau(x) is estimated once from `threshold` (exact or m draws),
// then n_mc independent clipped steps from x give the LHS mean and its
// standard error, and alpha_bar is the mean clip coefficient of those steps.
Lemma2Result Lemma2Check(const StochasticProblem& problem,
                         const ParamVector& x, double gamma, double p,
                         double beta, int64_t n_mc,
                         const ThresholdOptions& threshold, RngStream& rng);

// Exact evaluation by enumerating both outcomes of the two-point example
// with the exact quantile threshold.
Lemma2Result Lemma2CheckExactTwoPoint(const TwoPointProblem& problem, double x,
                                      double gamma, double p, double beta);

// Right-hand side of the recursion for given state quantities.
double Lemma2Rhs(double f_x, double grad_norm_sq, double alpha_bar,
                 double gamma, double p, double beta, double smoothness,
                 double sigma_q, double q);

// E[alpha g(x)] for the two-point example under the exact p-quantile
// threshold: omega * a1 * (x + r) + (1 - omega) * a2 * x.
double ExpectedUpdateTwoPoint(double x, const TwoPointProblem& problem,
                              double p);

inline constexpr double kFixedPointTolerance = 1e-10;
inline constexpr double kFixedPointLower = -50.0;
inline constexpr double kFixedPointUpper = -1e-6;

// Root of ExpectedUpdateTwoPoint by bisection on [lower, upper] to
// kFixedPointTolerance. Throws InvalidArgumentError("no sign change ...")
// when the interval does not bracket a root.
double FixedPointTwoPoint(const TwoPointProblem& problem, double p,
                          double lower = kFixedPointLower,
                          double upper = kFixedPointUpper);

// Closed form -omega / (1 - omega) for the estimator that returns 1 with
// probability omega and x otherwise (clipped branch normalized to 1).
double ClosedFormFixedPoint(double omega);

}  // namespace qclab

#endif  // QCLAB_ANALYSIS_H_
