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
#ifndef QCLAB_RUN_TRACE_H_
#define QCLAB_RUN_TRACE_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "qclab/param_vector.h"

namespace qclab {

// State x^t and the update quantities used to leave it at iteration t.
struct TraceRow {
  int64_t iter = 0;
  double f = 0.0;
  double grad_norm_sq = 0.0;  // ||grad f(x^t)||^2, exact
  double tau = 0.0;
  double p = 0.0;
  double gamma = 0.0;
  double alpha = 1.0;  // applied clip coefficient (batch mean for DP runs)
  bool clipped = false;
  double noise_scale = 0.0;  // tau * sigma_dp for DP runs
  double x_norm = 0.0;

  bool operator==(const TraceRow&) const = default;
};

// Recorded rows plus running sums over every iteration, recorded or not.
struct RunTrace {
  std::vector<TraceRow> rows;
  int64_t iterations = 0;
  double gamma_sum = 0.0;             // Gamma_T
  double weighted_grad_sq_sum = 0.0;  // sum_t gamma_t ||grad f(x^t)||^2
  double min_grad_norm_sq = std::numeric_limits<double>::infinity();
  int64_t clipped_count = 0;
  ParamVector final_x;
  double final_f = 0.0;

  // Folds one iteration into the sums and keeps the row when `keep` is set.
  void Add(const TraceRow& row, bool keep);

  bool operator==(const RunTrace&) const = default;
};

// (c / Gamma_T) sum_t gamma_t ||grad f(x^t)||^2 over all iterations.
double StationarityMeasure(const RunTrace& trace, double c);

}  // namespace qclab

#endif  // QCLAB_RUN_TRACE_H_
