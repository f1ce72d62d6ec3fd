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
#include "qclab/param_vector.h"

#include <cmath>
#include <sstream>
#include <utility>

#include "qclab/errors.h"

namespace qclab {

ParamVector::ParamVector(std::size_t dim, double fill) : values_(dim, fill) {}

ParamVector::ParamVector(std::vector<double> values)
    : values_(std::move(values)) {}

ParamVector::ParamVector(std::initializer_list<double> values)
    : values_(values) {}

double ParamVector::Dot(const ParamVector& other) const {
  Require(other.dim() == dim(), "ParamVector::Dot: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    sum += values_[i] * other.values_[i];
  }
  return sum;
}

double ParamVector::SquaredNorm() const {
  double sum = 0.0;
  for (double v : values_) sum += v * v;
  return sum;
}

double ParamVector::Norm() const { return std::sqrt(SquaredNorm()); }

bool ParamVector::AllFinite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void ParamVector::Reset(std::size_t dim) { values_.assign(dim, 0.0); }

ParamVector& ParamVector::operator+=(const ParamVector& other) {
  Require(other.dim() == dim(), "ParamVector::operator+=: dimension mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other[i];
  return *this;
}

ParamVector& ParamVector::operator-=(const ParamVector& other) {
  Require(other.dim() == dim(), "ParamVector::operator-=: dimension mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other[i];
  return *this;
}

ParamVector& ParamVector::operator*=(double scale) {
  for (double& v : values_) v *= scale;
  return *this;
}

std::string ParamVector::DebugString() const {
  std::ostringstream out;
  out.precision(17);
  out << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out << ", ";
    out << values_[i];
  }
  out << ")";
  return out.str();
}

ParamVector operator+(ParamVector lhs, const ParamVector& rhs) {
  lhs += rhs;
  return lhs;
}

ParamVector operator-(ParamVector lhs, const ParamVector& rhs) {
  lhs -= rhs;
  return lhs;
}

ParamVector operator*(double scale, ParamVector v) {
  v *= scale;
  return v;
}

void RequireFiniteVector(const ParamVector& x, std::size_t expected_dim,
                         const std::string& what) {
  Require(!x.empty(), what + " must have at least one entry");
  if (expected_dim != 0) {
    Require(x.dim() == expected_dim,
            what + " has dimension " + std::to_string(x.dim()) +
                ", expected " + std::to_string(expected_dim));
  }
  Require(x.AllFinite(), what + " contains a non-finite entry");
}

}  // namespace qclab
