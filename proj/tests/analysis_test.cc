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
#include <cmath>

#include "gtest/gtest.h"
#include "qclab/analysis.h"
#include "qclab/bounds.h"
#include "qclab/errors.h"
#include "qclab/noise_model.h"
#include "qclab/param_vector.h"
#include "qclab/privacy.h"
#include "qclab/quadratic_problem.h"
#include "qclab/rng.h"
#include "qclab/run_trace.h"
#include "qclab/schedule.h"
#include "qclab/two_point_problem.h"

namespace qclab {
namespace {

BoundInputs ExampleInputs() {
  BoundInputs inputs;
  inputs.f0_gap = 1.0;
  inputs.smoothness = 1.0;
  inputs.sigma_q = 1.0;
  inputs.q = 2.0;
  inputs.p = 0.9;
  inputs.beta = 0.2;
  inputs.c = 0.2;
  inputs.gamma = 0.1;
  inputs.T = 100;
  return inputs;
}

TEST(RhsCorollary1Test, Example) {
  const BoundTerms terms = RhsCorollary1(ExampleInputs());
  EXPECT_NEAR(terms.optimization, 0.2, 1e-12);
  EXPECT_NEAR(terms.variance, 2.0, 1e-12);
  EXPECT_NEAR(terms.bias, 0.5, 1e-12);
  EXPECT_NEAR(terms.total, 2.7, 1e-12);
}

TEST(RhsCorollary1Test, BiasTermSurvivesLongHorizons) {
  BoundInputs inputs = ExampleInputs();
  inputs.gamma = 1e-6;
  inputs.T = int64_t{1} << 50;
  const BoundTerms terms = RhsCorollary1(inputs);
  EXPECT_NEAR(terms.total, terms.bias, 1e-4);
  EXPECT_NEAR(terms.bias, 0.5, 1e-12);
}

TEST(RhsCorollary1Test, RejectsStepAboveLimit) {
  BoundInputs inputs = ExampleInputs();
  inputs.gamma = 0.71;
  EXPECT_THROW(RhsCorollary1(inputs), InvalidArgumentError);
  inputs = ExampleInputs();
  inputs.p = 0.15;
  EXPECT_THROW(RhsCorollary1(inputs), InvalidArgumentError);
}

TEST(RhsTheorem1Test, ConstantSchedulesMatchCorollary) {
  const BoundInputs inputs = ExampleInputs();
  const double rhs = RhsTheorem1(inputs, StepSchedule::Constant(0.1),
                                 QuantileSchedule::Constant(0.9));
  EXPECT_NEAR(rhs, RhsCorollary1(inputs).total, 1e-12);
}

TEST(RhsTheorem1Test, NoiselessIsOptimizationTerm) {
  BoundInputs inputs = ExampleInputs();
  inputs.sigma_q = 0.0;
  const StepSchedule steps = StepSchedule::Polynomial(0.3, 1.0 / 3.0);
  double gamma_sum = 0.0;
  for (int64_t t = 0; t < inputs.T; ++t) gamma_sum += steps.At(t);
  EXPECT_NEAR(RhsTheorem1(inputs, steps,
                          QuantileSchedule::Polynomial(0.9, -1.0 / 3.0)),
              2.0 / gamma_sum, 1e-12);
}

TEST(RhsTheorem1Test, RejectsScheduleViolatingStepCondition) {
  const BoundInputs inputs = ExampleInputs();
  EXPECT_THROW(RhsTheorem1(inputs, StepSchedule::Polynomial(0.8, 0.5),
                           QuantileSchedule::Constant(0.9)),
               InvalidArgumentError);
}

TEST(RhsTheorem2Test, NoiselessIsHalfTheOptimizationTerm) {
  BoundInputs inputs = ExampleInputs();
  inputs.sigma_q = 0.0;
  EXPECT_NEAR(RhsTheorem2(inputs), 1.0 / (0.1 * 100), 1e-12);
}

TEST(RhsTheorem2Test, TermsAndScheduleFormAgree) {
  BoundInputs inputs = ExampleInputs();
  inputs.B = 4;
  inputs.sigma_dp = 0.5;
  inputs.gamma = 0.05;
  const BoundTerms terms = RhsTheorem2Terms(inputs);
  const double s = BigS(4, 0.5);
  EXPECT_NEAR(terms.optimization, 1.0 / (0.05 * 100), 1e-12);
  EXPECT_NEAR(terms.variance, 2.0 * 0.05 * s / 0.1, 1e-12);
  EXPECT_NEAR(terms.bias, 0.1 / (2.0 * 0.2), 1e-12);
  EXPECT_NEAR(terms.total, RhsTheorem2(inputs), 1e-12);
  EXPECT_NEAR(RhsTheorem2(inputs, StepSchedule::Constant(0.05),
                          QuantileSchedule::Constant(0.9)),
              terms.total, 1e-12);
}

TEST(RhsTheorem2Test, CalibratedNoiseDominates) {
  const double sigma_dp = SigmaDp(1.0, 1e-5, 100, 1.0);
  const double s = BigS(100, sigma_dp);
  EXPECT_NEAR(s, 0.01 + 100.0 * std::log(1e5), 1e-9);
  EXPECT_NEAR(s, 1151.30, 0.005);
  BoundInputs inputs = ExampleInputs();
  inputs.B = 100;
  inputs.sigma_dp = sigma_dp;
  inputs.gamma = 1e-4;
  const BoundTerms terms = RhsTheorem2Terms(inputs);
  EXPECT_NEAR(terms.variance, 2.0 * 1e-4 * s / 0.1, 1e-9);
  EXPECT_GT(terms.variance, terms.bias);
  inputs.gamma = 1e-3;
  EXPECT_THROW(RhsTheorem2(inputs), InvalidArgumentError);
}

TEST(RhsFixedClippingTest, Example) {
  EXPECT_NEAR(RhsFixedClipping(1.0, 0.01, 10000, 1.0, 1.0, 1.0), 1.0201,
              1e-12);
}

TEST(RhsFixedClippingTest, Limits) {
  const double large_tau = RhsFixedClipping(1.0, 0.01, 10000, 1e12, 1.0, 1.0);
  EXPECT_NEAR(large_tau, 0.01 + 0.01, 1e-12);
  EXPECT_NEAR(RhsFixedClipping(1.0, 0.01, 10000, 2.0, 1.0, 0.0),
              0.005 * 0.005 + 0.01, 1e-12);
}

TEST(Lemma2Test, ZeroNoiseIsExactDescent) {
  const QuadraticProblem problem(ParamVector{1.0, 0.5}, ParamVector(2, 0.0),
                                 NoiseModel::None());
  RngStream rng(60, StreamId::kDataSampling);
  const ParamVector x{2.0, -1.0};
  const Lemma2Result result =
      Lemma2Check(problem, x, 0.3, 0.75, 0.5, kMinLemma2Samples, {}, rng);
  const ParamVector next = x - 0.3 * problem.ExactGradient(x);
  EXPECT_NEAR(result.lhs, problem.Value(next), 1e-12);
  EXPECT_EQ(result.lhs_stderr, 0.0);
  EXPECT_GE(result.margin, 0.0);
}

TEST(Lemma2Test, GaussianQuadraticWithinStatisticalSlack) {
  const QuadraticProblem problem(ParamVector{1.0}, ParamVector{0.0},
                                 NoiseModel::Gaussian(1.0));
  RngStream rng(61, StreamId::kDataSampling);
  ThresholdOptions options;
  options.m = 4096;
  for (int rep = 0; rep < 3; ++rep) {
    const Lemma2Result result = Lemma2Check(
        problem, ParamVector{1.0}, 0.05, 0.75, 0.5, kMinLemma2Samples,
        options, rng);
    EXPECT_GE(result.margin, -4.0 * result.lhs_stderr) << rep;
  }
}

TEST(Lemma2Test, RejectsSmallSampleCount) {
  const QuadraticProblem problem(ParamVector{1.0}, ParamVector{0.0},
                                 NoiseModel::Gaussian(1.0));
  RngStream rng(62, StreamId::kDataSampling);
  EXPECT_THROW(Lemma2Check(problem, ParamVector{1.0}, 0.05, 0.75, 0.5, 1000,
                           {}, rng),
               InvalidArgumentError);
}

TEST(Lemma2Test, TwoPointExactEnumeration) {
  const TwoPointProblem problem(2.0, 0.75);
  const double gamma = 0.1;
  // At x = -1 the draws are 1 (mass 0.75) and -1 (mass 0.25); both atoms
  // have norm 1, so nothing is clipped.
  const Lemma2Result result =
      Lemma2CheckExactTwoPoint(problem, -1.0, gamma, 0.75, 0.5);
  const double expected =
      0.75 * problem.Value(ParamVector{-1.0 - gamma * 1.0}) +
      0.25 * problem.Value(ParamVector{-1.0 + gamma * 1.0});
  EXPECT_NEAR(result.lhs, expected, 1e-15);
  EXPECT_EQ(result.alpha_bar, 1.0);
  EXPECT_GE(result.margin, 0.0);
}

TEST(Lemma2Test, ExactAndMonteCarloAgree) {
  const TwoPointProblem problem(2.0, 0.75);
  RngStream rng(63, StreamId::kDataSampling);
  ThresholdOptions options;
  options.exact = true;
  const Lemma2Result exact =
      Lemma2CheckExactTwoPoint(problem, -2.7, 0.1, 0.5, 0.5);
  const Lemma2Result mc = Lemma2Check(problem, ParamVector{-2.7}, 0.1, 0.5,
                                      0.5, kMinLemma2Samples, options, rng);
  EXPECT_NEAR(mc.lhs, exact.lhs, 4.0 * mc.lhs_stderr);
  EXPECT_EQ(mc.tau, exact.tau);
}

TEST(ExpectedUpdateTest, Examples) {
  const TwoPointProblem problem(2.0, 0.75);
  EXPECT_NEAR(ExpectedUpdateTwoPoint(-0.5, problem, 0.5), 1.0, 1e-15);
  EXPECT_NEAR(ExpectedUpdateTwoPoint(-1.6, problem, 0.5), 0.2, 1e-15);
  EXPECT_NEAR(ExpectedUpdateTwoPoint(-1.5, problem, 0.9), 0.0, 1e-15);
}

TEST(FixedPointTest, OracleRoot) {
  const TwoPointProblem problem(2.0, 0.75);
  const double root = FixedPointTwoPoint(problem, 0.5);
  // For x < -2, tau = |x + 2| and E[g] = 0.75 (x + 2) - 0.25 |x + 2|, which
  // only vanishes at x = -2; for x in (-2, -1) it stays positive.
  EXPECT_NEAR(root, -2.0, 1e-9);
  EXPECT_LE(std::abs(ExpectedUpdateTwoPoint(root, problem, 0.5)), 1e-9);
  EXPECT_GT(std::abs(problem.GradientAt(root)), 0.1);
  EXPECT_GT(std::abs(root - problem.Minimizer()[0]), 1e-6);
}

TEST(FixedPointTest, ConsistencyAcrossQuantiles) {
  const TwoPointProblem problem(2.0, 0.75);
  for (double p : {0.3, 0.5, 0.7, 0.8, 0.95}) {
    const double root = FixedPointTwoPoint(problem, p);
    EXPECT_LE(std::abs(ExpectedUpdateTwoPoint(root, problem, p)), 1e-9) << p;
  }
}

TEST(FixedPointTest, NoClippingRecoversMinimizer) {
  const TwoPointProblem problem(2.0, 0.75);
  EXPECT_NEAR(FixedPointTwoPoint(problem, 0.99), -1.5, 1e-9);
}

TEST(FixedPointTest, ReportsMissingSignChange) {
  const TwoPointProblem problem(2.0, 0.75);
  try {
    FixedPointTwoPoint(problem, 0.5, -1.0, -0.1);
    FAIL() << "expected an error";
  } catch (const InvalidArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("no sign change"), std::string::npos);
  }
}

TEST(ClosedFormFixedPointTest, Examples) {
  EXPECT_DOUBLE_EQ(ClosedFormFixedPoint(0.75), -3.0);
  EXPECT_NEAR(ClosedFormFixedPoint(2.0 / 3.0), -2.0, 1e-12);
  EXPECT_NEAR(ClosedFormFixedPoint(0.5 + 1e-9), -1.0, 1e-8);
  EXPECT_THROW(ClosedFormFixedPoint(0.5), InvalidArgumentError);
  EXPECT_THROW(ClosedFormFixedPoint(1.0), InvalidArgumentError);
}

TEST(StationarityMeasureTest, HandBuiltTrace) {
  RunTrace trace;
  TraceRow row;
  row.gamma = 1.0;
  row.grad_norm_sq = 4.0;
  trace.Add(row, true);
  row.grad_norm_sq = 2.0;
  trace.Add(row, true);
  EXPECT_DOUBLE_EQ(StationarityMeasure(trace, 0.5), 1.5);
}

TEST(StationarityMeasureTest, ZeroGradients) {
  RunTrace trace;
  TraceRow row;
  row.gamma = 0.3;
  for (int i = 0; i < 5; ++i) trace.Add(row, i % 2 == 0);
  EXPECT_EQ(StationarityMeasure(trace, 1.0), 0.0);
}

}  // namespace
}  // namespace qclab
