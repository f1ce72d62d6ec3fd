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
#ifndef QCLAB_ERRORS_H_
#define QCLAB_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qclab {

// Raised when a caller-supplied parameter violates a documented precondition.
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an optimizer iterate stops being finite.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(int64_t iteration, const std::string& message)
      : std::runtime_error(message), iteration_(iteration) {}

  int64_t iteration() const { return iteration_; }

 private:
  int64_t iteration_;
};

// Throws InvalidArgumentError with `message` unless `condition` holds.
inline void Require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgumentError(message);
}

}  // namespace qclab

#endif  // QCLAB_ERRORS_H_
