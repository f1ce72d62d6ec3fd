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
#include <limits>

#include "gtest/gtest.h"
#include "qclab/clipping.h"
#include "qclab/errors.h"
#include "qclab/noise_model.h"
#include "qclab/optimizer.h"
#include "qclab/param_vector.h"
#include "qclab/privacy.h"
#include "qclab/quadratic_problem.h"
#include "qclab/run_trace.h"
#include "qclab/schedule.h"

namespace qclab {
namespace {

QuadraticProblem GaussianQuadratic() {
  return QuadraticProblem(ParamVector{1.0, 0.5}, ParamVector(2, 0.0),
                          NoiseModel::Gaussian(1.0));
}

OptimizerConfig QuantileConfig(double gamma, int64_t T, uint64_t seed) {
  OptimizerConfig config;
  config.x0 = ParamVector{3.0, -2.0};
  config.steps = StepSchedule::Constant(gamma);
  config.T = T;
  config.seed = seed;
  config.clip = ClipConfig::Quantile(QuantileSchedule::Constant(0.9));
  return config;
}

DpConfig Dp(int64_t B, double sigma_dp, int64_t T) {
  DpConfig dp;
  dp.B = B;
  dp.T = T;
  dp.override_sigma_dp = sigma_dp;
  return dp;
}

TEST(SigmaDpTest, Examples) {
  EXPECT_NEAR(SigmaDp(1.0, 1e-5, 100, 1.0),
              10.0 * std::sqrt(5.0 * std::log(10.0)), 1e-12);
  EXPECT_NEAR(SigmaDp(1.0, 1e-5, 100, 1.0), 33.93, 0.005);
  EXPECT_NEAR(SigmaDp(2.0, 1e-5, 100, 1.0), 16.97, 0.005);
  EXPECT_EQ(SigmaDp(1.0, 1e-5, 100, 0.0), 0.0);
}

TEST(SigmaDpTest, RejectsInvalid) {
  EXPECT_THROW(SigmaDp(1.0, 0.0, 100, 1.0), InvalidArgumentError);
  EXPECT_THROW(SigmaDp(1.0, 1.0, 100, 1.0), InvalidArgumentError);
  EXPECT_THROW(SigmaDp(0.0, 1e-5, 100, 1.0), InvalidArgumentError);
  EXPECT_THROW(SigmaDp(1.0, 1e-5, 0, 1.0), InvalidArgumentError);
}

TEST(DpConfigTest, OverrideWins) {
  DpConfig dp;
  dp.T = 100;
  dp.C = 1.0;
  EXPECT_NEAR(dp.sigma_dp(), SigmaDp(1.0, 1e-5, 100, 1.0), 1e-15);
  dp.override_sigma_dp = 0.25;
  EXPECT_EQ(dp.sigma_dp(), 0.25);
}

TEST(BigSTest, Examples) {
  EXPECT_DOUBLE_EQ(BigS(1, 0.0), 1.0);
  EXPECT_NEAR(BigS(100, 0.1), 0.02, 1e-15);
  EXPECT_DOUBLE_EQ(BigS(4, 2.0), 4.25);
}

TEST(DpMaxStepSizeTest, Examples) {
  EXPECT_NEAR(DpMaxStepSize(0.9, 0.2, 0.2, 1.0, 1.0), 0.3, 1e-15);
  EXPECT_NEAR(DpMaxStepSize(0.9, 0.2, 0.2, 1.0, 10.0), 0.03, 1e-15);
  EXPECT_THROW(DpMaxStepSize(0.5, 0.6, 0.3, 1.0, 1.0), InvalidArgumentError);
}

TEST(RunDpQcSgdTest, NoNoiseSingleSampleMatchesQcSgd) {
  const QuadraticProblem problem = GaussianQuadratic();
  const OptimizerConfig config = QuantileConfig(0.1, 1000, 8);
  const RunTrace qc = RunQcSgd(problem, config);
  const RunTrace dp = RunDpQcSgd(problem, config, Dp(1, 0.0, 1000));
  EXPECT_TRUE(qc == dp);
}

TEST(RunDpQcSgdTest, NoNoiseBatchOnDeterministicProblemIsGradientDescent) {
  const QuadraticProblem problem(ParamVector{1.0, 0.5}, ParamVector(2, 0.0),
                                 NoiseModel::None());
  OptimizerConfig config = QuantileConfig(0.1, 200, 1);
  config.clip.threshold.exact = true;
  const RunTrace dp = RunDpQcSgd(problem, config, Dp(4, 0.0, 200));
  const RunTrace gd = RunSgd(problem, config);
  ASSERT_EQ(dp.rows.size(), gd.rows.size());
  for (std::size_t i = 0; i < dp.rows.size(); ++i) {
    ASSERT_NEAR(dp.rows[i].x_norm, gd.rows[i].x_norm,
                1e-12 * (1.0 + gd.rows[i].x_norm));
  }
  EXPECT_EQ(dp.clipped_count, 0);
}

TEST(SampleDpGradientTest, NoiseVarianceIsNotDividedByBatch) {
  const QuadraticProblem problem = GaussianQuadratic();
  const ParamVector x{1.0, 1.0};
  RngStream data(21, StreamId::kDataSampling);
  RngStream noise(21, StreamId::kDpNoise);
  const double tau = 1.5;
  const double sigma_dp = 0.8;
  const int n = 10000;
  double sum_sq[2] = {0.0, 0.0};
  double sum[2] = {0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const DpGradient g =
        SampleDpGradient(problem, x, tau, 16, sigma_dp, data, noise);
    ASSERT_EQ(g.noise_scale, tau * sigma_dp);
    for (std::size_t k = 0; k < 2; ++k) {
      ASSERT_EQ(g.direction[k], g.clipped_mean[k] + g.noise[k]);
      sum[k] += g.noise[k];
      sum_sq[k] += g.noise[k] * g.noise[k];
    }
  }
  const double expected = (tau * sigma_dp) * (tau * sigma_dp);
  for (std::size_t k = 0; k < 2; ++k) {
    const double mean = sum[k] / n;
    const double variance = (sum_sq[k] - n * mean * mean) / (n - 1);
    EXPECT_NEAR(variance / expected, 1.0, 0.05) << k;
  }
}

TEST(SampleDpGradientTest, EachBatchGradientIsClipped) {
  const QuadraticProblem problem = GaussianQuadratic();
  RngStream data(22, StreamId::kDataSampling);
  RngStream noise(22, StreamId::kDpNoise);
  for (int i = 0; i < 1000; ++i) {
    const DpGradient g = SampleDpGradient(problem, ParamVector{5.0, 5.0}, 0.5,
                                          8, 0.0, data, noise);
    ASSERT_LE(g.clipped_mean.Norm(), 0.5 * (1.0 + 1e-12));
    ASSERT_EQ(g.noise.Norm(), 0.0);
  }
}

TEST(RunDpQcSgdTest, NoiseScaleFollowsThreshold) {
  const QuadraticProblem problem = GaussianQuadratic();
  const double sigma_dp = 0.3;
  const RunTrace trace = RunDpQcSgd(problem, QuantileConfig(0.05, 500, 2),
                                    Dp(4, sigma_dp, 500));
  for (const TraceRow& row : trace.rows) {
    ASSERT_EQ(row.noise_scale, row.tau * sigma_dp) << row.iter;
  }
}

TEST(RunDpQcSgdTest, LargerBatchesReduceStationarity) {
  const QuadraticProblem problem = GaussianQuadratic();
  const int64_t T = 2000;
  const int seeds = 20;
  double previous = std::numeric_limits<double>::infinity();
  for (int64_t B : {1, 4, 16}) {
    double total = 0.0;
    for (int s = 0; s < seeds; ++s) {
      OptimizerConfig config = QuantileConfig(0.2, T, s);
      config.trace_every = T;
      total += StationarityMeasure(RunDpQcSgd(problem, config, Dp(B, 0.0, T)),
                                   0.2);
    }
    const double mean = total / seeds;
    EXPECT_LT(mean, previous) << B;
    previous = mean;
  }
}

TEST(RunDpQcSgdTest, RejectsInvalidBatch) {
  const QuadraticProblem problem = GaussianQuadratic();
  EXPECT_THROW(RunDpQcSgd(problem, QuantileConfig(0.1, 10, 0), Dp(0, 0.0, 10)),
               InvalidArgumentError);
}

}  // namespace
}  // namespace qclab
