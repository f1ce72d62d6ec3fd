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
#ifndef QCLAB_CALIBRATION_H_
#define QCLAB_CALIBRATION_H_

#include <cstdint>
#include <span>
#include <string>

#include "qclab/param_vector.h"
#include "qclab/problem.h"
#include "qclab/rng.h"

namespace qclab {

inline constexpr int64_t kMinCalibrationSamples = 1000;
inline constexpr double kCalibrationDriftTolerance = 0.05;

struct CalibrationResult {
  double sigma_q = 0.0;
  // False when the estimate cannot be trusted; `diagnostic` says why.
  bool converged = true;
  // Largest relative change between the n/2 and n sample checkpoints.
  double max_drift = 0.0;
  std::string diagnostic;
};

// Empirical max over `probe_points` of (mean ||g_xi - grad f||^q)^(1/q)
// using `n_samples` draws per point.
//
// Non-convergence is flagged when
//  - the noise has no finite q-th moment,
//  - the noise has no finite 2q-th moment (the Monte Carlo estimate then has
//    infinite variance and no error control), or
//  - the estimate moves by more than 5% between the last two doubling
//    checkpoints (n/2 and n draws).
CalibrationResult CalibrateSigmaQ(const StochasticProblem& problem,
                                  std::span<const ParamVector> probe_points,
                                  double q, int64_t n_samples, RngStream& rng);

}  // namespace qclab

#endif  // QCLAB_CALIBRATION_H_
