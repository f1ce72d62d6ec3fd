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
#include "qclab/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace qclab {

void ParallelFor(int64_t n, int jobs, const std::function<void(int64_t)>& fn) {
  if (n <= 0) return;
  const int64_t workers = std::clamp<int64_t>(jobs, 1, n);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  if (workers == 1) {
    for (int64_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<int64_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int64_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (int64_t i = next++; i < n && !failed; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
            failed = true;
          }
        }
      });
    }
    for (std::thread& thread : threads) thread.join();
  }
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

int DefaultJobs() {
  const char* value = std::getenv("QCLAB_JOBS");
  if (value == nullptr) return 1;
  try {
    std::size_t used = 0;
    const int jobs = std::stoi(value, &used);
    if (used == std::string(value).size() && jobs > 0) return jobs;
  } catch (const std::exception&) {
  }
  return 1;
}

}  // namespace qclab
