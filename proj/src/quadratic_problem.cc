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
#include "qclab/quadratic_problem.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qclab/errors.h"

namespace qclab {

double GaussianNormMoment(double sigma, std::size_t dim, double q) {
  Require(dim >= 1, "gaussian norm moment: dim must be positive");
  Require(q > 0.0, "gaussian norm moment: q must be positive");
  if (sigma == 0.0) return 0.0;
  // E||Z||^q = 2^(q/2) Gamma((d + q) / 2) / Gamma(d / 2) for Z ~ N(0, I_d).
  const double d = static_cast<double>(dim);
  const double log_moment = 0.5 * q * std::log(2.0) +
                            std::lgamma(0.5 * (d + q)) - std::lgamma(0.5 * d);
  return sigma * std::exp(log_moment / q);
}

QuadraticProblem::QuadraticProblem(ParamVector curvature, ParamVector target,
                                   NoiseModel noise, std::optional<double> q,
                                   std::optional<double> sigma_q)
    : curvature_(std::move(curvature)),
      target_(std::move(target)),
      noise_(noise) {
  RequireFiniteVector(target_, 0, "quadratic target");
  RequireFiniteVector(curvature_, target_.dim(), "quadratic curvature");
  double max_curvature = 0.0;
  for (double a : curvature_.values()) {
    Require(a >= 0.0, "quadratic curvature entries must be non-negative");
    max_curvature = std::max(max_curvature, a);
  }
  Require(max_curvature > 0.0,
          "quadratic curvature must have a positive entry (L > 0)");

  const bool heavy_tailed = noise_.kind() == NoiseModel::Kind::kStudentT ||
                            noise_.kind() == NoiseModel::Kind::kParetoSymmetric;
  Require(q.has_value() || !heavy_tailed || noise_.IsZero(),
          "quadratic problem: heavy-tailed noise needs a declared q");
  const double order = q.value_or(2.0);
  Require(order > 1.0 && order <= 2.0,
          "quadratic problem: q must lie in (1, 2]");

  constants_.smoothness = max_curvature;
  constants_.q = order;
  constants_.f_inf = 0.0;
  if (sigma_q.has_value()) {
    Require(std::isfinite(*sigma_q) && *sigma_q >= 0.0,
            "quadratic problem: sigma_q must be finite and non-negative");
    constants_.sigma_q = sigma_q;
  } else if (noise_.IsZero()) {
    constants_.sigma_q = 0.0;
  } else if (noise_.kind() == NoiseModel::Kind::kGaussian) {
    constants_.sigma_q = GaussianNormMoment(noise_.scale(), dim(), order);
  }
}

QuadraticProblem QuadraticProblem::WithSigmaQ(double sigma_q) const {
  return QuadraticProblem(curvature_, target_, noise_, constants_.q, sigma_q);
}

double QuadraticProblem::Value(const ParamVector& x) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < target_.dim(); ++i) {
    const double diff = x[i] - target_[i];
    sum += curvature_[i] * diff * diff;
  }
  return 0.5 * sum;
}

void QuadraticProblem::ExactGradientInto(const ParamVector& x,
                                         ParamVector& out) const {
  if (out.dim() != dim()) out.Reset(dim());
  for (std::size_t i = 0; i < target_.dim(); ++i) {
    out[i] = curvature_[i] * (x[i] - target_[i]);
  }
}

void QuadraticProblem::SampleGradientInto(const ParamVector& x, RngStream& rng,
                                          ParamVector& out) const {
  if (out.dim() != dim()) out.Reset(dim());
  for (std::size_t i = 0; i < target_.dim(); ++i) {
    out[i] = curvature_[i] * (x[i] - target_[i]) + noise_.Sample(rng);
  }
}

std::optional<std::vector<NormAtom>> QuadraticProblem::NormAtoms(
    const ParamVector& x) const {
  if (!noise_.IsZero()) return std::nullopt;
  return std::vector<NormAtom>{{ExactGradient(x).Norm(), 1.0}};
}

std::string QuadraticProblem::Describe() const {
  std::ostringstream out;
  out << "quadratic(d=" << dim() << ", L=" << constants_.smoothness
      << ", noise=" << noise_.Describe() << ")";
  return out.str();
}

}  // namespace qclab
