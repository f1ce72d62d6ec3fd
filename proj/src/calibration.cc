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
#include "qclab/calibration.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qclab/errors.h"

namespace qclab {

CalibrationResult CalibrateSigmaQ(const StochasticProblem& problem,
                                  std::span<const ParamVector> probe_points,
                                  double q, int64_t n_samples, RngStream& rng) {
  Require(!probe_points.empty(), "calibration: need at least one probe point");
  Require(q > 0.0, "calibration: q must be positive");
  Require(n_samples >= kMinCalibrationSamples,
          "calibration: n_samples must be at least 1000");

  CalibrationResult result;
  ParamVector exact;
  ParamVector sample;
  const int64_t half = n_samples / 2;
  for (const ParamVector& x : probe_points) {
    RequireFiniteVector(x, problem.dim(), "calibration probe point");
    problem.ExactGradientInto(x, exact);
    double sum = 0.0;
    double half_estimate = 0.0;
    for (int64_t i = 0; i < n_samples; ++i) {
      problem.SampleGradientInto(x, rng, sample);
      sample -= exact;
      sum += std::pow(sample.Norm(), q);
      if (i + 1 == half) {
        half_estimate = std::pow(sum / static_cast<double>(half), 1.0 / q);
      }
    }
    const double estimate =
        std::pow(sum / static_cast<double>(n_samples), 1.0 / q);
    const double drift =
        estimate > 0.0 ? std::abs(estimate - half_estimate) / estimate : 0.0;
    result.sigma_q = std::max(result.sigma_q, estimate);
    result.max_drift = std::max(result.max_drift, drift);
  }

  std::ostringstream why;
  if (!problem.NoiseMomentFinite(q)) {
    result.converged = false;
    why << "noise has no finite moment of order " << q << "; ";
  } else if (!problem.NoiseMomentFinite(2.0 * q)) {
    result.converged = false;
    why << "noise has no finite moment of order " << 2.0 * q
        << ", so the order-" << q << " estimate has unbounded variance; ";
  }
  if (result.max_drift > kCalibrationDriftTolerance) {
    result.converged = false;
    why << "estimate drifted " << result.max_drift
        << " between the last two doubling checkpoints; ";
  }
  result.diagnostic = why.str();
  if (!result.diagnostic.empty()) {
    result.diagnostic.resize(result.diagnostic.size() - 2);
  }
  return result;
}

}  // namespace qclab
