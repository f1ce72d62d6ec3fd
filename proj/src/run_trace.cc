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
#include "qclab/run_trace.h"

#include <algorithm>

#include "qclab/errors.h"

namespace qclab {

void RunTrace::Add(const TraceRow& row, bool keep) {
  ++iterations;
  gamma_sum += row.gamma;
  weighted_grad_sq_sum += row.gamma * row.grad_norm_sq;
  min_grad_norm_sq = std::min(min_grad_norm_sq, row.grad_norm_sq);
  if (row.clipped) ++clipped_count;
  if (keep) rows.push_back(row);
}

double StationarityMeasure(const RunTrace& trace, double c) {
  Require(trace.iterations > 0 && trace.gamma_sum > 0.0,
          "stationarity measure: trace is empty");
  return c * trace.weighted_grad_sq_sum / trace.gamma_sum;
}

}  // namespace qclab
