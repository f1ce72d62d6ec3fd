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
#include "qclab/rng.h"

#include <cmath>

#include "qclab/errors.h"

namespace qclab {
namespace {

constexpr uint64_t kStreamMultiplier = 0xD1B54A32D192ED03ULL;
constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;

}  // namespace

std::string_view StreamName(StreamId id) {
  switch (id) {
    case StreamId::kDataSampling:
      return "data_sampling";
    case StreamId::kDpNoise:
      return "dp_noise";
    case StreamId::kQuantileEstimation:
      return "quantile_estimation";
  }
  return "unknown";
}

uint64_t SplitMix64(uint64_t x) {
  uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(uint64_t seed, StreamId stream)
    : seed_(seed),
      stream_(stream),
      engine_(SplitMix64(SplitMix64(seed) ^
                         (static_cast<uint64_t>(stream) * kStreamMultiplier))) {}

uint64_t RngStream::NextWord() {
  ++words_drawn_;
  return engine_();
}

double RngStream::Uniform() {
  return static_cast<double>(NextWord() >> 11) * kTwoPowMinus53;
}

double RngStream::UniformOpen() {
  return (static_cast<double>(NextWord() >> 11) + 0.5) * kTwoPowMinus53;
}

double RngStream::Normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * Uniform() - 1.0;
    v = 2.0 * Uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * factor;
  has_spare_normal_ = true;
  return u * factor;
}

double RngStream::Gamma(double shape) {
  Require(shape > 0.0 && std::isfinite(shape),
          "RngStream::Gamma: shape must be positive and finite");
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a + 1) * U^(1/a).
    const double g = Gamma(shape + 1.0);
    return g * std::pow(UniformOpen(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = Normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = UniformOpen();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RngStream::StudentT(double dof) {
  Require(dof > 0.0, "RngStream::StudentT: dof must be positive");
  const double z = Normal();
  const double chi2 = 2.0 * Gamma(0.5 * dof);
  return z / std::sqrt(chi2 / dof);
}

bool RngStream::Bernoulli(double probability) {
  return Uniform() < probability;
}

}  // namespace qclab
