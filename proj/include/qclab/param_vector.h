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
#ifndef QCLAB_PARAM_VECTOR_H_
#define QCLAB_PARAM_VECTOR_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qclab {

// Dense real vector of model parameters. A default-constructed vector is
// empty and only serves as a placeholder; every vector handed to a problem or
// optimizer has dim() >= 1.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::size_t dim, double fill = 0.0);
  explicit ParamVector(std::vector<double> values);
  ParamVector(std::initializer_list<double> values);

  std::size_t dim() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }

  double Dot(const ParamVector& other) const;
  double SquaredNorm() const;
  double Norm() const;
  bool AllFinite() const;

  // Resizes to `dim` entries, zero-filled, reusing storage when possible.
  void Reset(std::size_t dim);

  ParamVector& operator+=(const ParamVector& other);
  ParamVector& operator-=(const ParamVector& other);
  ParamVector& operator*=(double scale);

  bool operator==(const ParamVector& other) const = default;

  std::string DebugString() const;

 private:
  std::vector<double> values_;
};

ParamVector operator+(ParamVector lhs, const ParamVector& rhs);
ParamVector operator-(ParamVector lhs, const ParamVector& rhs);
ParamVector operator*(double scale, ParamVector v);

// Throws InvalidArgumentError unless `x` is non-empty, has `expected_dim`
// entries (when non-zero) and every entry is finite.
void RequireFiniteVector(const ParamVector& x, std::size_t expected_dim,
                         const std::string& what);

}  // namespace qclab

#endif  // QCLAB_PARAM_VECTOR_H_
