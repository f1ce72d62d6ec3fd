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
#ifndef QCLAB_PARALLEL_H_
#define QCLAB_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace qclab {

// Calls fn(i) for every i in [0, n) using up to `jobs` threads. Work items
// must be independent and write their results by index; the outcome is then
// the same for every job count. After the first failure no new items start;
// once running items finish, the exception of the smallest failing index is
// rethrown.
void ParallelFor(int64_t n, int jobs, const std::function<void(int64_t)>& fn);

// QCLAB_JOBS when it holds a positive integer, 1 otherwise.
int DefaultJobs();

}  // namespace qclab

#endif  // QCLAB_PARALLEL_H_
