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
#ifndef QCLAB_CONFIG_H_
#define QCLAB_CONFIG_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qclab/optimizer.h"
#include "qclab/privacy.h"
#include "qclab/problem.h"

namespace qclab {

// Invalid configuration. what() reads "<source>:<line>: <pointer>: <message>"
// (the line is omitted when unknown).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::string pointer, int line)
      : std::runtime_error(what), pointer_(std::move(pointer)), line_(line) {}

  // JSON pointer of the offending value, e.g. "/optimizer/quantile/p0".
  const std::string& pointer() const { return pointer_; }
  // 1-based line in the source text, 0 when unknown.
  int line() const { return line_; }

 private:
  std::string pointer_;
  int line_;
};

// Line of every JSON pointer in `text` (the line of the key for object
// members, of the value for array elements). `text` must be valid JSON.
std::map<std::string, int> LocateJsonPointers(std::string_view text);

// A parsed configuration document plus the line map of its source text.
struct ConfigSource {
  std::string name;
  nlohmann::json document;
  std::map<std::string, int> lines;
};

// Throws ConfigError on syntax errors or when the file cannot be read.
ConfigSource ParseConfigSource(std::string_view text, std::string name);
ConfigSource LoadConfigSource(const std::string& path);

enum class Algorithm { kSgd, kClippedSgd, kQcSgd, kDpQcSgd };

std::string AlgorithmName(Algorithm algorithm);

struct RunConfig {
  std::shared_ptr<const StochasticProblem> problem;
  Algorithm algorithm = Algorithm::kQcSgd;
  // Everything except the seed, which comes from `seeds`.
  OptimizerConfig optimizer;
  std::optional<DpConfig> dp;
  std::vector<uint64_t> seeds;
  std::string output_dir;
  std::string output_prefix;
  // Weight in the stationarity measure.
  double c = 1.0;
  // Enables bound columns in sweep output.
  std::optional<double> beta;
  // Validated document without the output block; hashed into summaries.
  nlohmann::json canonical;
};

// Strict schema check and conversion. Unknown keys, wrong types and out of
// range values raise ConfigError naming the offending field.
RunConfig BuildRunConfig(const ConfigSource& source);

// FNV-1a of the canonical document, as 16 hex digits.
std::string ConfigHash(const RunConfig& config);

}  // namespace qclab

#endif  // QCLAB_CONFIG_H_
