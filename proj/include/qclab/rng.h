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
#ifndef QCLAB_RNG_H_
#define QCLAB_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace qclab {

// Independent random streams used by one optimizer run. Each stream is
// reproducible on its own, so changing how many draws one consumer makes
// (e.g. the DP noise) never shifts another consumer's sequence.
enum class StreamId : uint64_t {
  kDataSampling = 1,
  kDpNoise = 2,
  kQuantileEstimation = 3,
};

std::string_view StreamName(StreamId id);

// Deterministic random stream.
//
// Generator: std::mt19937_64, whose output sequence is fixed by the C++
// standard. The engine seed for (seed, stream) is
//   SplitMix64(SplitMix64(seed) ^ (stream * 0xD1B54A32D192ED03)),
// so distinct streams of one seed start from unrelated engine states. All
// variates below are derived from raw 64-bit words by code in this library
// (no std::*_distribution), keeping the sequences identical across standard
// library implementations.
class RngStream {
 public:
  RngStream(uint64_t seed, StreamId stream);

  uint64_t seed() const { return seed_; }
  StreamId stream() const { return stream_; }
  // Number of raw 64-bit words consumed so far.
  uint64_t words_drawn() const { return words_drawn_; }

  uint64_t NextWord();
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on the open interval (0, 1).
  double UniformOpen();
  // Standard normal, Marsaglia polar method (pairs are cached).
  double Normal();
  // Gamma(shape, 1) via Marsaglia-Tsang.
  double Gamma(double shape);
  // Student-t with `dof` degrees of freedom.
  double StudentT(double dof);
  bool Bernoulli(double probability);

 private:
  uint64_t seed_;
  StreamId stream_;
  std::mt19937_64 engine_;
  uint64_t words_drawn_ = 0;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

uint64_t SplitMix64(uint64_t x);

}  // namespace qclab

#endif  // QCLAB_RNG_H_
