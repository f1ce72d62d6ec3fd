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
#include <vector>

#include "gtest/gtest.h"
#include "qclab/calibration.h"
#include "qclab/errors.h"
#include "qclab/noise_model.h"
#include "qclab/param_vector.h"
#include "qclab/quadratic_problem.h"
#include "qclab/rng.h"
#include "qclab/two_point_problem.h"

namespace qclab {
namespace {

double UniformIn(RngStream& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.Uniform();
}

QuadraticProblem IdentityQuadratic(std::size_t dim, double sigma) {
  return QuadraticProblem(ParamVector(dim, 1.0), ParamVector(dim, 0.0),
                          sigma > 0.0 ? NoiseModel::Gaussian(sigma)
                                      : NoiseModel::None());
}

TEST(QuadraticProblemTest, FiniteDifferenceAtExample) {
  const QuadraticProblem problem = IdentityQuadratic(2, 1.0);
  const ParamVector fd =
      FiniteDifferenceGradient(problem, ParamVector{1.0, 0.0}, 1e-5);
  EXPECT_NEAR(fd[0], 1.0, 1e-6);
  EXPECT_NEAR(fd[1], 0.0, 1e-6);
}

TEST(QuadraticProblemTest, ExactGradientExample) {
  const QuadraticProblem problem(ParamVector{2.0}, ParamVector{1.0},
                                 NoiseModel::None());
  EXPECT_DOUBLE_EQ(problem.ExactGradient(ParamVector{0.0})[0], -2.0);
  EXPECT_DOUBLE_EQ(problem.Value(ParamVector{0.0}), 1.0);
  EXPECT_DOUBLE_EQ(problem.constants().smoothness, 2.0);
}

TEST(QuadraticProblemTest, GradientMatchesFiniteDifferences) {
  const QuadraticProblem problem(ParamVector{1.0, 0.5, 3.0},
                                 ParamVector{0.5, -1.0, 2.0},
                                 NoiseModel::Gaussian(1.0));
  RngStream rng(11, StreamId::kDataSampling);
  for (int i = 0; i < 100; ++i) {
    ParamVector x(3);
    for (std::size_t k = 0; k < 3; ++k) x[k] = UniformIn(rng, -5.0, 5.0);
    const ParamVector exact = problem.ExactGradient(x);
    const ParamVector fd = FiniteDifferenceGradient(problem, x, 1e-5);
    for (std::size_t k = 0; k < 3; ++k) ASSERT_NEAR(exact[k], fd[k], 1e-5);
  }
}

TEST(QuadraticProblemTest, SmoothnessHoldsOnRandomPairs) {
  const QuadraticProblem problem(ParamVector{1.0, 0.5, 3.0},
                                 ParamVector(3, 0.0), NoiseModel::None());
  const double smoothness = problem.constants().smoothness;
  RngStream rng(12, StreamId::kDataSampling);
  for (int i = 0; i < 1000; ++i) {
    ParamVector x(3);
    ParamVector y(3);
    for (std::size_t k = 0; k < 3; ++k) {
      x[k] = UniformIn(rng, -10.0, 10.0);
      y[k] = UniformIn(rng, -10.0, 10.0);
    }
    const double lhs =
        (problem.ExactGradient(x) - problem.ExactGradient(y)).Norm();
    ASSERT_LE(lhs, smoothness * (x - y).Norm() * (1.0 + 1e-12));
  }
}

TEST(QuadraticProblemTest, SampleGradientIsUnbiased) {
  const QuadraticProblem problem(ParamVector{1.0, 2.0}, ParamVector{1.0, -1.0},
                                 NoiseModel::Gaussian(1.0));
  RngStream points(13, StreamId::kDataSampling);
  RngStream rng(14, StreamId::kDataSampling);
  const int n = 100000;
  for (int i = 0; i < 10; ++i) {
    const ParamVector x{UniformIn(points, -3.0, 3.0), UniformIn(points, -3.0, 3.0)};
    const ParamVector exact = problem.ExactGradient(x);
    ParamVector mean(2);
    for (int j = 0; j < n; ++j) mean += problem.SampleGradient(x, rng);
    mean *= 1.0 / n;
    for (std::size_t k = 0; k < 2; ++k) {
      ASSERT_NEAR(mean[k], exact[k], 4.0 / std::sqrt(n));
    }
  }
}

TEST(QuadraticProblemTest, GaussianSampleMeanAtExample) {
  const QuadraticProblem problem = IdentityQuadratic(2, 1.0);
  RngStream rng(15, StreamId::kDataSampling);
  const int n = 100000;
  ParamVector mean(2);
  for (int j = 0; j < n; ++j) {
    mean += problem.SampleGradient(ParamVector{1.0, 1.0}, rng);
  }
  mean *= 1.0 / n;
  EXPECT_NEAR(mean[0], 1.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(mean[1], 1.0, 4.0 / std::sqrt(n));
}

TEST(QuadraticProblemTest, HeavyTailedNoiseIsCentred) {
  const QuadraticProblem problem(ParamVector{1.0}, ParamVector{0.0},
                                 NoiseModel::StudentT(3.0, 1.0), 1.5);
  RngStream rng(16, StreamId::kDataSampling);
  const int n = 200000;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    sum += problem.SampleGradient(ParamVector{2.0}, rng)[0];
  }
  // Var of t(3) is 3.
  EXPECT_NEAR(sum / n, 2.0, 5.0 * std::sqrt(3.0 / n));
}

TEST(QuadraticProblemTest, GaussianSigmaQClosedForm) {
  const QuadraticProblem problem = IdentityQuadratic(4, 0.5);
  EXPECT_NEAR(problem.SigmaQ(), 0.5 * 2.0, 1e-12);
}

TEST(QuadraticProblemTest, HeavyTailedNeedsCalibration) {
  const QuadraticProblem problem(ParamVector{1.0}, ParamVector{0.0},
                                 NoiseModel::StudentT(3.0, 1.0), 1.5);
  EXPECT_FALSE(problem.constants().sigma_q.has_value());
  EXPECT_THROW((void)problem.SigmaQ(), InvalidArgumentError);
  EXPECT_DOUBLE_EQ(problem.WithSigmaQ(1.7).SigmaQ(), 1.7);
}

TEST(QuadraticProblemTest, RejectsInvalidConstruction) {
  EXPECT_THROW(QuadraticProblem(ParamVector{1.0, -1.0}, ParamVector(2),
                                NoiseModel::None()),
               InvalidArgumentError);
  EXPECT_THROW(QuadraticProblem(ParamVector{1.0}, ParamVector(2),
                                NoiseModel::None()),
               InvalidArgumentError);
  EXPECT_THROW(NoiseModel::StudentT(1.0, 1.0), InvalidArgumentError);
  EXPECT_THROW(NoiseModel::Gaussian(-1.0), InvalidArgumentError);
}

TEST(GaussianNormMomentTest, KnownValues) {
  // E||Z||^2 = d.
  EXPECT_NEAR(GaussianNormMoment(1.0, 3, 2.0), std::sqrt(3.0), 1e-12);
  // E|Z| = sqrt(2 / pi) in one dimension.
  EXPECT_NEAR(GaussianNormMoment(2.0, 1, 1.0), 2.0 * std::sqrt(2.0 / M_PI),
              1e-12);
}

TEST(TwoPointProblemTest, GradientExamples) {
  const TwoPointProblem problem(2.0, 0.75);
  EXPECT_DOUBLE_EQ(problem.GradientAt(-1.5), 0.0);
  EXPECT_DOUBLE_EQ(problem.GradientAt(-3.0), -1.5);
  EXPECT_DOUBLE_EQ(problem.GradientAt(0.0), 1.5);
  EXPECT_DOUBLE_EQ(problem.Minimizer()[0], -1.5);
  EXPECT_NEAR(FiniteDifferenceGradient(problem, ParamVector{0.0}, 1e-5)[0],
              1.5, 1e-6);
  EXPECT_LE(std::abs(FiniteDifferenceGradient(problem, problem.Minimizer(),
                                              1e-5)[0]),
            1e-6);
}

TEST(TwoPointProblemTest, NoiseScale) {
  const TwoPointProblem problem(2.0, 0.75);
  // r * sqrt(omega (1 - omega)).
  EXPECT_NEAR(problem.SigmaQ(), std::sqrt(0.75), 1e-12);
  EXPECT_DOUBLE_EQ(problem.constants().smoothness, 1.0);
}

TEST(TwoPointProblemTest, DrawsTakeTwoValues) {
  const TwoPointProblem problem(2.0, 0.75);
  RngStream rng(17, StreamId::kDataSampling);
  const int n = 100000;
  int shifted = 0;
  for (int i = 0; i < n; ++i) {
    const double g = problem.SampleGradient(ParamVector{-0.5}, rng)[0];
    ASSERT_TRUE(g == 1.5 || g == -0.5) << g;
    shifted += g == 1.5 ? 1 : 0;
  }
  EXPECT_NEAR(static_cast<double>(shifted) / n, 0.75,
              4.0 * std::sqrt(0.75 * 0.25 / n));
}

TEST(TwoPointProblemTest, NormAtoms) {
  const TwoPointProblem problem(2.0, 0.75);
  const std::vector<NormAtom> atoms = problem.NormAtomsAt(-0.5);
  ASSERT_EQ(atoms.size(), 2u);
  double mass = 0.0;
  for (const NormAtom& atom : atoms) {
    mass += atom.mass;
    EXPECT_TRUE((atom.value == 1.5 && atom.mass == 0.75) ||
                (atom.value == 0.5 && atom.mass == 0.25));
  }
  EXPECT_DOUBLE_EQ(mass, 1.0);
}

TEST(TwoPointProblemTest, RejectsInvalidParameters) {
  EXPECT_THROW(TwoPointProblem(0.0, 0.75), InvalidArgumentError);
  EXPECT_THROW(TwoPointProblem(2.0, 0.5), InvalidArgumentError);
  EXPECT_THROW(TwoPointProblem(2.0, 1.0), InvalidArgumentError);
}

TEST(CalibrationTest, GaussianMatchesClosedForm) {
  const QuadraticProblem problem = IdentityQuadratic(1, 1.0);
  RngStream rng(18, StreamId::kDataSampling);
  const std::vector<ParamVector> probes{ParamVector{0.0}, ParamVector{1.0}};
  const CalibrationResult result =
      CalibrateSigmaQ(problem, probes, 2.0, 100000, rng);
  EXPECT_TRUE(result.converged) << result.diagnostic;
  EXPECT_NEAR(result.sigma_q, 1.0, 0.05);
}

TEST(CalibrationTest, ZeroNoise) {
  const QuadraticProblem problem = IdentityQuadratic(3, 0.0);
  RngStream rng(19, StreamId::kDataSampling);
  const std::vector<ParamVector> probes{ParamVector{1.0, 2.0, 3.0}};
  const CalibrationResult result =
      CalibrateSigmaQ(problem, probes, 2.0, 1000, rng);
  EXPECT_EQ(result.sigma_q, 0.0);
  EXPECT_TRUE(result.converged);
}

TEST(CalibrationTest, FlagsUnboundedVariance) {
  const QuadraticProblem problem(ParamVector{1.0}, ParamVector{0.0},
                                 NoiseModel::StudentT(3.0, 1.0), 1.5);
  RngStream rng(20, StreamId::kDataSampling);
  const std::vector<ParamVector> probes{ParamVector{0.0}};
  const CalibrationResult result =
      CalibrateSigmaQ(problem, probes, 2.5, 10000, rng);
  EXPECT_FALSE(result.converged);
  EXPECT_FALSE(result.diagnostic.empty());
}

TEST(CalibrationTest, RejectsTooFewSamples) {
  const QuadraticProblem problem = IdentityQuadratic(1, 1.0);
  RngStream rng(21, StreamId::kDataSampling);
  const std::vector<ParamVector> probes{ParamVector{0.0}};
  EXPECT_THROW(CalibrateSigmaQ(problem, probes, 2.0, 999, rng),
               InvalidArgumentError);
}

}  // namespace
}  // namespace qclab
