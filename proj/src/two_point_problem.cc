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
#include "qclab/two_point_problem.h"

#include <cmath>
#include <sstream>

#include "qclab/errors.h"

namespace qclab {

TwoPointProblem::TwoPointProblem(double r, double omega, double q)
    : r_(r), omega_(omega), q_(q) {
  Require(std::isfinite(r) && r > 0.0, "two-point problem: r must be positive");
  Require(omega > 0.5 && omega < 1.0,
          "two-point problem: omega must lie in (1/2, 1)");
  Require(q > 1.0 && q <= 2.0, "two-point problem: q must lie in (1, 2]");
}

double TwoPointProblem::Value(const ParamVector& x) const {
  const double shifted = x[0] + r_;
  return 0.5 * (omega_ * shifted * shifted + (1.0 - omega_) * x[0] * x[0]);
}

void TwoPointProblem::ExactGradientInto(const ParamVector& x,
                                        ParamVector& out) const {
  if (out.dim() != 1) out.Reset(1);
  out[0] = GradientAt(x[0]);
}

void TwoPointProblem::SampleGradientInto(const ParamVector& x, RngStream& rng,
                                         ParamVector& out) const {
  if (out.dim() != 1) out.Reset(1);
  out[0] = rng.Bernoulli(omega_) ? x[0] + r_ : x[0];
}

ProblemConstants TwoPointProblem::constants() const {
  ProblemConstants c;
  c.smoothness = 1.0;
  c.q = q_;
  // The deviation from grad f is r(1 - omega) w.p. omega and -r omega
  // w.p. 1 - omega, independent of x.
  const double moment = omega_ * std::pow(r_ * (1.0 - omega_), q_) +
                        (1.0 - omega_) * std::pow(r_ * omega_, q_);
  c.sigma_q = std::pow(moment, 1.0 / q_);
  c.f_inf = 0.5 * r_ * r_ * omega_ * (1.0 - omega_);
  return c;
}

std::vector<NormAtom> TwoPointProblem::NormAtomsAt(double x) const {
  return {{std::abs(x + r_), omega_}, {std::abs(x), 1.0 - omega_}};
}

std::optional<std::vector<NormAtom>> TwoPointProblem::NormAtoms(
    const ParamVector& x) const {
  return NormAtomsAt(x[0]);
}

std::string TwoPointProblem::Describe() const {
  std::ostringstream out;
  out << "two_point(r=" << r_ << ", omega=" << omega_ << ")";
  return out.str();
}

}  // namespace qclab
