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
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "qclab/clipping.h"
#include "qclab/errors.h"
#include "qclab/noise_model.h"
#include "qclab/param_vector.h"
#include "qclab/quadratic_problem.h"
#include "qclab/rng.h"
#include "qclab/two_point_problem.h"

namespace qclab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(ClipCoefficientTest, Examples) {
  EXPECT_DOUBLE_EQ(ClipCoefficient(2.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(ClipCoefficient(0.5, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(ClipCoefficient(0.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(ClipCoefficient(0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(ClipCoefficient(3.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(ClipCoefficient(3.0, kInf), 1.0);
}

TEST(ClipCoefficientTest, ClippedNormNeverExceedsThreshold) {
  RngStream rng(30, StreamId::kDataSampling);
  for (int i = 0; i < 10000; ++i) {
    const double norm = 10.0 * rng.Uniform();
    const double tau = 5.0 * rng.Uniform();
    const double alpha = ClipCoefficient(norm, tau);
    ASSERT_GE(alpha, 0.0);
    ASSERT_LE(alpha, 1.0);
    ASSERT_LE(alpha * norm, tau * (1.0 + 1e-15));
    if (norm <= tau) ASSERT_EQ(alpha, 1.0);
  }
}

TEST(EmpiricalQuantileTest, Examples) {
  const std::vector<double> norms{5.0, 1.0, 4.0, 2.0, 3.0};
  EXPECT_EQ(EmpiricalQuantile(norms, 0.5), 3.0);
  EXPECT_EQ(EmpiricalQuantile(norms, 0.9), 5.0);
  EXPECT_EQ(EmpiricalQuantile(norms, 0.01), 1.0);
  const std::vector<double> single{7.0};
  EXPECT_EQ(EmpiricalQuantile(single, 0.3), 7.0);
  EXPECT_EQ(QuantileRank(5, 0.5), 3);
  EXPECT_EQ(QuantileRank(10, 0.01), 1);
}

TEST(EmpiricalQuantileTest, RejectsInvalid) {
  const std::vector<double> empty;
  const std::vector<double> norms{1.0};
  EXPECT_THROW(EmpiricalQuantile(empty, 0.5), InvalidArgumentError);
  EXPECT_THROW(EmpiricalQuantile(norms, 0.0), InvalidArgumentError);
  EXPECT_THROW(EmpiricalQuantile(norms, 1.0), InvalidArgumentError);
}

TEST(EmpiricalQuantileTest, UniformSample) {
  RngStream rng(31, StreamId::kQuantileEstimation);
  std::vector<double> norms(10000);
  for (double& v : norms) v = rng.Uniform();
  EXPECT_NEAR(EmpiricalQuantile(norms, 0.5), 0.5, 0.02);
}

TEST(EmpiricalQuantileTest, ClipCountMatchesOrderStatistic) {
  RngStream rng(32, StreamId::kQuantileEstimation);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng.Uniform() * 300);
    const double p = 0.01 + 0.98 * rng.Uniform();
    std::vector<double> norms(m);
    for (double& v : norms) v = std::abs(rng.Normal());
    const double tau = EmpiricalQuantile(norms, p);
    const int64_t k = QuantileRank(m, p);
    const auto above = std::count_if(norms.begin(), norms.end(),
                                     [&](double v) { return v > tau; });
    // Continuous draws have no ties, so exactly m - k exceed the k-th value.
    ASSERT_EQ(above, m - k);
  }
}

TEST(EmpiricalQuantileTest, MonotoneInP) {
  RngStream rng(33, StreamId::kQuantileEstimation);
  std::vector<double> norms(257);
  for (double& v : norms) v = rng.Uniform();
  double previous = 0.0;
  for (double p = 0.001; p < 1.0; p += 0.001) {
    const double tau = EmpiricalQuantile(norms, p);
    ASSERT_GE(tau, previous);
    previous = tau;
  }
}

TEST(ExactQuantileTest, TwoPointExamples) {
  const TwoPointProblem problem(2.0, 0.75);
  EXPECT_EQ(ExactQuantileTwoPoint(-0.5, problem, 0.2), 0.5);
  EXPECT_EQ(ExactQuantileTwoPoint(-0.5, problem, 0.5), 1.5);
  EXPECT_EQ(ExactQuantileTwoPoint(-1.5, problem, 0.5), 0.5);
  EXPECT_EQ(ExactQuantileTwoPoint(-1.5, problem, 0.75), 0.5);
  EXPECT_EQ(ExactQuantileTwoPoint(-1.5, problem, 0.76), 1.5);
  EXPECT_EQ(ExactQuantileTwoPoint(-1.5, problem, 0.9), 1.5);
}

TEST(ExactQuantileTest, MonotoneInP) {
  const std::vector<NormAtom> atoms{{3.0, 0.2}, {1.0, 0.5}, {2.0, 0.3}};
  double previous = 0.0;
  for (double p = 0.001; p < 1.0; p += 0.001) {
    const double tau = ExactDiscreteQuantile(atoms, p);
    ASSERT_GE(tau, previous);
    previous = tau;
  }
  EXPECT_EQ(ExactDiscreteQuantile(atoms, 0.5), 1.0);
  EXPECT_EQ(ExactDiscreteQuantile(atoms, 0.6), 2.0);
  EXPECT_EQ(ExactDiscreteQuantile(atoms, 0.99), 3.0);
}

TEST(ThresholdEstimatorTest, ExactRequiresAtoms) {
  const QuadraticProblem problem(ParamVector{1.0}, ParamVector{0.0},
                                 NoiseModel::Gaussian(1.0));
  RngStream rng(34, StreamId::kQuantileEstimation);
  ThresholdOptions options;
  options.exact = true;
  EXPECT_THROW(EstimateThreshold(problem, ParamVector{0.0}, 0.5, options, rng),
               InvalidArgumentError);
}

TEST(ThresholdEstimatorTest, EmpiricalUsesRequestedSampleCount) {
  const QuadraticProblem problem(ParamVector{1.0}, ParamVector{0.0},
                                 NoiseModel::Gaussian(1.0));
  RngStream rng(35, StreamId::kQuantileEstimation);
  ThresholdOptions options;
  options.m = 64;
  const ThresholdEstimate estimate =
      EstimateThreshold(problem, ParamVector{0.0}, 0.5, options, rng);
  EXPECT_EQ(estimate.m_used, 64);
  EXPECT_EQ(estimate.source, ThresholdSource::kEmpiricalOrderStatistic);
  EXPECT_EQ(rng.words_drawn() > 0, true);
}

TEST(ClippingBoundsTest, TauUpperBoundArithmetic) {
  EXPECT_NEAR(TauUpperBound(1.0, 1.0, 0.75, 2.0), 3.0, 1e-12);
  EXPECT_NEAR(TauUpperBound(1.0, 1.0, 0.5, 2.0), 1.0 + std::sqrt(2.0), 1e-12);
}

TEST(ClippingBoundsTest, BiasUpperBoundArithmetic) {
  EXPECT_NEAR(BiasUpperBound(1.0, 0.75, 2.0), 0.5, 1e-12);
  EXPECT_NEAR(BiasUpperBound(2.0, 0.5, 1.5), 2.0 * std::pow(0.5, 1.0 / 3.0),
              1e-12);
}

TEST(EmpiricalBiasTest, ZeroNoiseHasNoBias) {
  const QuadraticProblem problem(ParamVector{1.0, 2.0}, ParamVector(2, 0.0),
                                 NoiseModel::None());
  RngStream rng(36, StreamId::kDataSampling);
  const BiasEstimate estimate = EmpiricalBias(
      problem, ParamVector{1.0, -1.0}, 0.5, kMinBiasSamples, {}, rng);
  EXPECT_EQ(estimate.bias_norm, 0.0);
  EXPECT_EQ(estimate.alpha_bar, 1.0);
}

TEST(EmpiricalBiasTest, TwoPointAboveBothAtomsIsUnbiased) {
  const TwoPointProblem problem(2.0, 0.75);
  RngStream rng(37, StreamId::kDataSampling);
  ThresholdOptions options;
  options.exact = true;
  const BiasEstimate estimate = EmpiricalBias(
      problem, ParamVector{-3.0}, 0.8, kMinBiasSamples, options, rng);
  EXPECT_EQ(estimate.tau, 3.0);
  EXPECT_EQ(estimate.alpha_bar, 1.0);
  EXPECT_NEAR(estimate.bias_norm, 0.0, 4.0 * estimate.bias_stderr);
}

TEST(EmpiricalBiasTest, TwoPointMatchesEnumeration) {
  // At x = -3 the draws are -1 (mass 0.75) and -3 (mass 0.25); tau = 1
  // scales the second by 1/3, so E[alpha g] = -1 and alpha_bar = 5/6
  // against grad f = -1.5.
  const TwoPointProblem problem(2.0, 0.75);
  RngStream rng(38, StreamId::kDataSampling);
  ThresholdOptions options;
  options.exact = true;
  const BiasEstimate estimate =
      EmpiricalBias(problem, ParamVector{-3.0}, 0.5, 100000, options, rng);
  EXPECT_EQ(estimate.tau, 1.0);
  EXPECT_NEAR(estimate.alpha_bar, 5.0 / 6.0,
              4.0 * estimate.alpha_bar_stderr + 1e-12);
  EXPECT_NEAR(estimate.bias_norm, 0.25, 4.0 * estimate.bias_stderr + 1e-12);
  EXPECT_LE(estimate.bias_norm,
            BiasUpperBound(problem.SigmaQ(), 0.5, 2.0) +
                4.0 * estimate.bias_stderr);
}

TEST(EmpiricalBiasTest, MeanClipCoefficientAtLeastP) {
  const QuadraticProblem problem(ParamVector{1.0, 1.0, 1.0},
                                 ParamVector(3, 0.0),
                                 NoiseModel::Gaussian(1.0));
  RngStream rng(39, StreamId::kDataSampling);
  ThresholdOptions options;
  options.m = 4096;
  for (double p : {0.5, 0.75, 0.9}) {
    const BiasEstimate estimate = EmpiricalBias(
        problem, ParamVector{1.0, 0.0, -1.0}, p, kMinBiasSamples, options, rng);
    EXPECT_GE(estimate.alpha_bar, p - 4.0 * estimate.alpha_bar_stderr) << p;
  }
}

TEST(EmpiricalBiasTest, RejectsTooFewSamples) {
  const TwoPointProblem problem(2.0, 0.75);
  RngStream rng(40, StreamId::kDataSampling);
  EXPECT_THROW(EmpiricalBias(problem, ParamVector{0.0}, 0.5, 100, {}, rng),
               InvalidArgumentError);
}

}  // namespace
}  // namespace qclab
