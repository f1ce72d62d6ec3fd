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
#include "qclab/config.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <span>
#include <set>
#include <sstream>
#include <utility>

#include "qclab/errors.h"
#include "qclab/noise_model.h"
#include "qclab/quadratic_problem.h"
#include "qclab/schedule.h"
#include "qclab/two_point_problem.h"

namespace qclab {
namespace {

using nlohmann::json;

std::string EscapePointerToken(std::string_view token) {
  std::string out;
  for (char ch : token) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

// Raised while walking the document; BuildRunConfig() attaches the line.
struct FieldError {
  std::string pointer;
  std::string message;
};

[[noreturn]] void Fail(const std::string& pointer, const std::string& message) {
  throw FieldError{pointer, message};
}

void Check(bool ok, const std::string& pointer, const std::string& message) {
  if (!ok) Fail(pointer, message);
}

// Runs a library constructor and reports its validation errors at `pointer`.
template <typename Fn>
auto Guard(const std::string& pointer, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InvalidArgumentError& e) {
    Fail(pointer, e.what());
  }
}

double AsNumber(const json& value, const std::string& pointer) {
  Check(value.is_number(), pointer, "expected a number");
  const double number = value.get<double>();
  Check(std::isfinite(number), pointer, "expected a finite number");
  return number;
}

int64_t AsInteger(const json& value, const std::string& pointer) {
  if (value.is_number_unsigned()) {
    const uint64_t number = value.get<uint64_t>();
    Check(number <= static_cast<uint64_t>(INT64_MAX), pointer,
          "integer out of range");
    return static_cast<int64_t>(number);
  }
  if (value.is_number_integer()) return value.get<int64_t>();
  if (value.is_number_float()) {
    const double number = value.get<double>();
    Check(std::isfinite(number) && std::floor(number) == number &&
              std::abs(number) <= 9007199254740992.0,
          pointer, "expected an integer");
    return static_cast<int64_t>(number);
  }
  Fail(pointer, "expected an integer");
}

// Reads the members of one JSON object and rejects whatever it did not read.
class ObjectReader {
 public:
  // Keys outside `allowed` are rejected immediately; allowed keys that the
  // caller never reads are rejected by Finish().
  ObjectReader(const json& value, std::string pointer,
               std::span<const std::string_view> allowed)
      : value_(value), pointer_(std::move(pointer)) {
    Check(value.is_object(), pointer_.empty() ? "/" : pointer_,
          "expected an object");
    for (const auto& item : value.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) ==
          allowed.end()) {
        Fail(Child(item.key()), "unknown key \"" + item.key() + "\"");
      }
    }
  }

  const std::string& pointer() const { return pointer_; }

  std::string Child(std::string_view key) const {
    return pointer_ + "/" + EscapePointerToken(key);
  }

  const json* Find(const std::string& key) {
    seen_.insert(key);
    const auto it = value_.find(key);
    return it == value_.end() ? nullptr : &*it;
  }

  const json& Require(const std::string& key) {
    const json* value = Find(key);
    if (value == nullptr) {
      Fail(pointer_.empty() ? "/" : pointer_,
           "missing required key \"" + key + "\"");
    }
    return *value;
  }

  double Number(const std::string& key) {
    return AsNumber(Require(key), Child(key));
  }

  std::optional<double> OptionalNumber(const std::string& key) {
    const json* value = Find(key);
    if (value == nullptr) return std::nullopt;
    return AsNumber(*value, Child(key));
  }

  int64_t Integer(const std::string& key) {
    return AsInteger(Require(key), Child(key));
  }

  std::optional<int64_t> OptionalInteger(const std::string& key) {
    const json* value = Find(key);
    if (value == nullptr) return std::nullopt;
    return AsInteger(*value, Child(key));
  }

  std::string String(const std::string& key) {
    const json& value = Require(key);
    Check(value.is_string(), Child(key), "expected a string");
    return value.get<std::string>();
  }

  std::optional<std::string> OptionalString(const std::string& key) {
    const json* value = Find(key);
    if (value == nullptr) return std::nullopt;
    Check(value->is_string(), Child(key), "expected a string");
    return value->get<std::string>();
  }

  std::optional<bool> OptionalBool(const std::string& key) {
    const json* value = Find(key);
    if (value == nullptr) return std::nullopt;
    Check(value->is_boolean(), Child(key), "expected true or false");
    return value->get<bool>();
  }

  std::vector<double> NumberArray(const std::string& key) {
    const json& value = Require(key);
    const std::string pointer = Child(key);
    Check(value.is_array(), pointer, "expected an array of numbers");
    std::vector<double> numbers;
    for (std::size_t i = 0; i < value.size(); ++i) {
      numbers.push_back(
          AsNumber(value[i], pointer + "/" + std::to_string(i)));
    }
    return numbers;
  }

  void Finish() const {
    for (const auto& item : value_.items()) {
      if (seen_.count(item.key()) == 0) {
        Fail(Child(item.key()),
             "key \"" + item.key() + "\" does not apply here");
      }
    }
  }

 private:
  const json& value_;
  std::string pointer_;
  std::set<std::string> seen_;
};

constexpr std::string_view kProblemKeys[] = {
    "kind", "q", "dim", "curvature", "target", "noise", "sigma_q", "r", "omega"};
constexpr std::string_view kNoiseKeys[] = {
    "model", "sigma", "dof", "tail_index", "scale"};
constexpr std::string_view kOptimizerKeys[] = {
    "algorithm", "T",        "trace_every", "x0",
    "step",      "quantile", "threshold",   "tau"};
constexpr std::string_view kStepKeys[] = {"kind", "gamma0",
                                                               "theta"};
constexpr std::string_view kQuantileKeys[] = {
    "kind", "p0", "nu", "h_min"};
constexpr std::string_view kDpKeys[] = {
    "B", "epsilon", "delta", "C", "sigma_dp"};

constexpr std::string_view kThresholdKeys[] = {"m", "exact"};
constexpr std::string_view kOutputKeys[] = {"dir", "prefix"};
constexpr std::string_view kAnalysisKeys[] = {"c", "beta"};
constexpr std::string_view kRootKeys[] = {"problem", "optimizer", "dp",
                                          "seeds",   "output",    "analysis"};

NoiseModel BuildNoise(ObjectReader& noise) {
  const std::string model = noise.String("model");
  NoiseModel result = NoiseModel::None();
  if (model == "none") {
    result = NoiseModel::None();
  } else if (model == "gaussian") {
    const double sigma = noise.Number("sigma");
    Check(sigma >= 0.0, noise.Child("sigma"), "must be non-negative");
    result = NoiseModel::Gaussian(sigma);
  } else if (model == "student_t") {
    const double dof = noise.Number("dof");
    const double scale = noise.OptionalNumber("scale").value_or(1.0);
    Check(dof > 1.0, noise.Child("dof"), "must be greater than 1");
    Check(scale >= 0.0, noise.Child("scale"), "must be non-negative");
    result = NoiseModel::StudentT(dof, scale);
  } else if (model == "pareto_symmetric") {
    const double tail_index = noise.Number("tail_index");
    const double scale = noise.OptionalNumber("scale").value_or(1.0);
    Check(tail_index > 1.0, noise.Child("tail_index"),
          "must be greater than 1");
    Check(scale >= 0.0, noise.Child("scale"), "must be non-negative");
    result = NoiseModel::ParetoSymmetric(tail_index, scale);
  } else {
    Fail(noise.Child("model"),
         "unknown noise model \"" + model +
             "\"; expected none, gaussian, student_t or pareto_symmetric");
  }
  noise.Finish();
  return result;
}

std::shared_ptr<const StochasticProblem> BuildProblem(ObjectReader& problem) {
  const std::string kind = problem.String("kind");
  const std::optional<double> q = problem.OptionalNumber("q");
  if (q.has_value()) {
    Check(*q > 1.0 && *q <= 2.0, problem.Child("q"), "must lie in (1, 2]");
  }
  std::shared_ptr<const StochasticProblem> result;
  if (kind == "quadratic") {
    const std::optional<int64_t> dim = problem.OptionalInteger("dim");
    if (dim.has_value()) Check(*dim >= 1, problem.Child("dim"), "must be >= 1");
    std::vector<double> curvature;
    const json& raw_curvature = problem.Require("curvature");
    if (raw_curvature.is_number()) {
      Check(dim.has_value(), problem.Child("curvature"),
            "a scalar curvature needs \"dim\"");
      curvature.assign(static_cast<std::size_t>(*dim),
                       AsNumber(raw_curvature, problem.Child("curvature")));
    } else {
      curvature = problem.NumberArray("curvature");
    }
    Check(!curvature.empty(), problem.Child("curvature"), "must not be empty");
    if (dim.has_value()) {
      Check(curvature.size() == static_cast<std::size_t>(*dim),
            problem.Child("curvature"), "length must equal dim");
    }
    for (double a : curvature) {
      Check(a > 0.0, problem.Child("curvature"), "entries must be positive");
    }
    std::vector<double> target(curvature.size(), 0.0);
    if (problem.Find("target") != nullptr) {
      target = problem.NumberArray("target");
      Check(target.size() == curvature.size(), problem.Child("target"),
            "length must equal the curvature length");
    }
    NoiseModel noise = NoiseModel::None();
    if (const json* raw_noise = problem.Find("noise")) {
      ObjectReader noise_reader(*raw_noise, problem.Child("noise"), kNoiseKeys);
      noise = BuildNoise(noise_reader);
    }
    const bool heavy_tailed = noise.kind() == NoiseModel::Kind::kStudentT ||
                              noise.kind() == NoiseModel::Kind::kParetoSymmetric;
    Check(!heavy_tailed || q.has_value(), problem.pointer(),
          "heavy-tailed noise needs an explicit \"q\"");
    const std::optional<double> sigma_q = problem.OptionalNumber("sigma_q");
    if (sigma_q.has_value()) {
      Check(*sigma_q >= 0.0, problem.Child("sigma_q"), "must be non-negative");
    }
    result = Guard(problem.pointer(), [&] {
      return std::make_shared<const QuadraticProblem>(
          ParamVector(curvature), ParamVector(target), noise, q, sigma_q);
    });
  } else if (kind == "two_point") {
    const double r = problem.Number("r");
    const double omega = problem.Number("omega");
    Check(r > 0.0, problem.Child("r"), "must be positive");
    Check(omega > 0.5 && omega < 1.0, problem.Child("omega"),
          "must lie in (1/2, 1)");
    result = Guard(problem.pointer(), [&] {
      return std::make_shared<const TwoPointProblem>(r, omega, q.value_or(2.0));
    });
  } else {
    Fail(problem.Child("kind"), "unknown problem kind \"" + kind +
                                    "\"; expected quadratic or two_point");
  }
  problem.Finish();
  return result;
}

StepSchedule BuildStep(ObjectReader& step) {
  const std::string kind = step.String("kind");
  const double gamma0 = step.Number("gamma0");
  Check(gamma0 > 0.0, step.Child("gamma0"), "must be positive");
  StepSchedule result = StepSchedule::Constant(gamma0);
  if (kind == "polynomial") {
    result = StepSchedule::Polynomial(gamma0, step.Number("theta"));
  } else if (kind != "constant") {
    Fail(step.Child("kind"), "unknown step schedule \"" + kind +
                                 "\"; expected constant or polynomial");
  }
  step.Finish();
  return result;
}

QuantileSchedule BuildQuantile(ObjectReader& quantile) {
  const std::string kind = quantile.String("kind");
  const double p0 = quantile.Number("p0");
  Check(p0 > 0.0 && p0 < 1.0, quantile.Child("p0"), "must lie in (0, 1)");
  QuantileSchedule result = QuantileSchedule::Constant(p0);
  if (kind == "polynomial") {
    const double nu = quantile.Number("nu");
    Check(nu <= 0.0, quantile.Child("nu"), "must be <= 0");
    const double h_min =
        quantile.OptionalNumber("h_min").value_or(kDefaultHMin);
    Check(h_min > 0.0 && h_min < 1.0, quantile.Child("h_min"),
          "must lie in (0, 1)");
    result = QuantileSchedule::Polynomial(p0, nu, h_min);
  } else if (kind != "constant") {
    Fail(quantile.Child("kind"), "unknown quantile schedule \"" + kind +
                                     "\"; expected constant or polynomial");
  }
  quantile.Finish();
  return result;
}

Algorithm ParseAlgorithm(const std::string& name, const std::string& pointer) {
  if (name == "sgd") return Algorithm::kSgd;
  if (name == "clipped_sgd") return Algorithm::kClippedSgd;
  if (name == "qc_sgd") return Algorithm::kQcSgd;
  if (name == "dp_qc_sgd") return Algorithm::kDpQcSgd;
  Fail(pointer, "unknown algorithm \"" + name +
                    "\"; expected sgd, clipped_sgd, qc_sgd or dp_qc_sgd");
}

void BuildOptimizer(ObjectReader& optimizer, RunConfig& config) {
  config.algorithm =
      ParseAlgorithm(optimizer.String("algorithm"), optimizer.Child("algorithm"));
  const bool quantile_clipping = config.algorithm == Algorithm::kQcSgd ||
                                 config.algorithm == Algorithm::kDpQcSgd;
  OptimizerConfig& out = config.optimizer;

  out.T = optimizer.Integer("T");
  Check(out.T >= 1, optimizer.Child("T"), "must be >= 1");
  out.trace_every = optimizer.OptionalInteger("trace_every").value_or(1);
  Check(out.trace_every >= 1, optimizer.Child("trace_every"), "must be >= 1");
  Check(out.T % out.trace_every == 0, optimizer.Child("trace_every"),
        "must divide T");

  out.x0 = ParamVector(optimizer.NumberArray("x0"));
  Check(out.x0.dim() == config.problem->dim(), optimizer.Child("x0"),
        "length must equal the problem dimension " +
            std::to_string(config.problem->dim()));

  ObjectReader step(optimizer.Require("step"), optimizer.Child("step"),
                    kStepKeys);
  out.steps = BuildStep(step);

  if (quantile_clipping) {
    ObjectReader quantile(optimizer.Require("quantile"),
                          optimizer.Child("quantile"), kQuantileKeys);
    const QuantileSchedule quantiles = BuildQuantile(quantile);
    ThresholdOptions threshold;
    if (const json* raw = optimizer.Find("threshold")) {
      ObjectReader reader(*raw, optimizer.Child("threshold"), kThresholdKeys);
      const int64_t m =
          reader.OptionalInteger("m").value_or(kDefaultThresholdSamples);
      Check(m >= 1 && m <= 100000000, reader.Child("m"),
            "must lie in [1, 1e8]");
      threshold.m = static_cast<int>(m);
      threshold.exact = reader.OptionalBool("exact").value_or(false);
      Check(!threshold.exact || config.problem->NormAtoms(out.x0).has_value(),
            reader.Child("exact"),
            "exact thresholds need a problem with a discrete gradient-norm "
            "distribution");
      reader.Finish();
    }
    out.clip = ClipConfig::Quantile(quantiles, threshold);
  } else if (config.algorithm == Algorithm::kClippedSgd) {
    const double tau = optimizer.Number("tau");
    Check(tau > 0.0, optimizer.Child("tau"), "must be positive");
    out.clip = ClipConfig::Constant(tau);
  } else {
    out.clip = ClipConfig::None();
  }
  optimizer.Finish();
}

DpConfig BuildDp(ObjectReader& dp, int64_t T) {
  DpConfig out;
  out.T = T;
  out.B = dp.Integer("B");
  Check(out.B >= 1, dp.Child("B"), "must be >= 1");
  out.override_sigma_dp = dp.OptionalNumber("sigma_dp");
  if (out.override_sigma_dp.has_value()) {
    Check(*out.override_sigma_dp >= 0.0, dp.Child("sigma_dp"),
          "must be non-negative");
  }
  const bool calibrated = !out.override_sigma_dp.has_value();
  const std::optional<double> epsilon =
      calibrated ? std::optional<double>(dp.Number("epsilon"))
                 : dp.OptionalNumber("epsilon");
  const std::optional<double> delta =
      calibrated ? std::optional<double>(dp.Number("delta"))
                 : dp.OptionalNumber("delta");
  if (epsilon.has_value()) {
    Check(*epsilon > 0.0, dp.Child("epsilon"), "must be positive");
    out.epsilon = *epsilon;
  }
  if (delta.has_value()) {
    Check(*delta > 0.0 && *delta < 1.0, dp.Child("delta"),
          "must lie in (0, 1)");
    out.delta = *delta;
  }
  out.C = dp.OptionalNumber("C").value_or(kDefaultDpCalibration);
  Check(out.C >= 0.0, dp.Child("C"), "must be non-negative");
  dp.Finish();
  Guard(dp.pointer(), [&] { out.Validate(); });
  return out;
}

std::vector<uint64_t> BuildSeeds(const json& value, const std::string& pointer) {
  std::vector<uint64_t> seeds;
  if (value.is_array()) {
    std::set<uint64_t> unique;
    for (std::size_t i = 0; i < value.size(); ++i) {
      const std::string item = pointer + "/" + std::to_string(i);
      const int64_t seed = AsInteger(value[i], item);
      Check(seed >= 0, item, "seeds must be non-negative");
      Check(unique.insert(static_cast<uint64_t>(seed)).second, item,
            "duplicate seed");
      seeds.push_back(static_cast<uint64_t>(seed));
    }
    Check(!seeds.empty(), pointer, "must not be empty");
  } else {
    const int64_t count = AsInteger(value, pointer);
    Check(count >= 1, pointer, "seed count must be >= 1");
    for (int64_t s = 0; s < count; ++s) seeds.push_back(static_cast<uint64_t>(s));
  }
  return seeds;
}

RunConfig Build(const json& document) {
  ObjectReader root(document, "", kRootKeys);
  RunConfig config;

  ObjectReader problem(root.Require("problem"), "/problem", kProblemKeys);
  config.problem = BuildProblem(problem);

  ObjectReader optimizer(root.Require("optimizer"), "/optimizer",
                         kOptimizerKeys);
  BuildOptimizer(optimizer, config);

  if (config.algorithm == Algorithm::kDpQcSgd) {
    ObjectReader dp(root.Require("dp"), "/dp", kDpKeys);
    config.dp = BuildDp(dp, config.optimizer.T);
  } else if (root.Find("dp") != nullptr) {
    Fail("/dp", "only valid with algorithm dp_qc_sgd");
  }

  config.seeds = {0};
  if (const json* seeds = root.Find("seeds")) {
    config.seeds = BuildSeeds(*seeds, "/seeds");
  }

  config.output_dir = "qclab_out";
  config.output_prefix = "run";
  if (const json* raw = root.Find("output")) {
    ObjectReader output(*raw, "/output", kOutputKeys);
    config.output_dir = output.OptionalString("dir").value_or("qclab_out");
    config.output_prefix = output.OptionalString("prefix").value_or("run");
    Check(!config.output_dir.empty(), output.Child("dir"), "must not be empty");
    Check(!config.output_prefix.empty() &&
              config.output_prefix.find('/') == std::string::npos,
          output.Child("prefix"), "must be a non-empty file name prefix");
    output.Finish();
  }

  if (const json* raw = root.Find("analysis")) {
    ObjectReader analysis(*raw, "/analysis", kAnalysisKeys);
    config.c = analysis.OptionalNumber("c").value_or(1.0);
    Check(config.c > 0.0, analysis.Child("c"), "must be positive");
    config.beta = analysis.OptionalNumber("beta");
    if (config.beta.has_value()) {
      Check(*config.beta > 0.0 && *config.beta < 1.0, analysis.Child("beta"),
            "must lie in (0, 1)");
    }
    analysis.Finish();
  }
  root.Finish();

  Guard("/optimizer", [&] { config.optimizer.Validate(*config.problem); });

  config.canonical = document;
  config.canonical.erase("output");
  config.canonical["seeds"] = config.seeds;
  return config;
}

int LineOf(const ConfigSource& source, std::string pointer) {
  while (true) {
    const auto it = source.lines.find(pointer == "/" ? "" : pointer);
    if (it != source.lines.end()) return it->second;
    if (pointer.empty() || pointer == "/") return 0;
    pointer.erase(pointer.rfind('/'));
  }
}

std::string Locate(const std::string& name, int line) {
  return line > 0 ? name + ":" + std::to_string(line) : name;
}

}  // namespace

std::map<std::string, int> LocateJsonPointers(std::string_view text) {
  struct Frame {
    bool object;
    std::string pointer;
    int64_t index = 0;
    std::string key;
    bool expect_key = true;
  };
  std::map<std::string, int> lines;
  std::vector<Frame> stack;
  int line = 1;

  const auto child_pointer = [&]() -> std::string {
    if (stack.empty()) return "";
    const Frame& top = stack.back();
    if (top.object) return top.pointer + "/" + EscapePointerToken(top.key);
    return top.pointer + "/" + std::to_string(top.index);
  };
  // Object members were recorded at their key.
  const auto begin_value = [&]() -> std::string {
    std::string pointer = child_pointer();
    if (stack.empty() || !stack.back().object) lines.emplace(pointer, line);
    return pointer;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ':') {
      ++i;
    } else if (ch == ',') {
      if (!stack.empty()) {
        if (stack.back().object) {
          stack.back().expect_key = true;
        } else {
          ++stack.back().index;
        }
      }
      ++i;
    } else if (ch == '{' || ch == '[') {
      std::string pointer = begin_value();
      stack.push_back(Frame{ch == '{', std::move(pointer), 0, "", true});
      ++i;
    } else if (ch == '}' || ch == ']') {
      if (!stack.empty()) stack.pop_back();
      ++i;
    } else if (ch == '"') {
      std::string value;
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) {
          const char escaped = text[i + 1];
          switch (escaped) {
            case 'n': value += '\n'; break;
            case 't': value += '\t'; break;
            case 'r': value += '\r'; break;
            case 'b': value += '\b'; break;
            case 'f': value += '\f'; break;
            case 'u': value += "\\u"; break;
            default: value += escaped; break;
          }
          i += 2;
        } else {
          value += text[i++];
        }
      }
      ++i;
      if (!stack.empty() && stack.back().object && stack.back().expect_key) {
        stack.back().key = std::move(value);
        stack.back().expect_key = false;
        lines.emplace(child_pointer(), line);
      } else {
        begin_value();
      }
    } else {
      begin_value();
      while (i < text.size() && text[i] != ',' && text[i] != ']' &&
             text[i] != '}' && !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    }
  }
  return lines;
}

ConfigSource ParseConfigSource(std::string_view text, std::string name) {
  ConfigSource source;
  source.name = std::move(name);
  try {
    source.document = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ConfigError(Locate(source.name, line) + ": invalid JSON: " + e.what(),
                      "", line);
  }
  source.lines = LocateJsonPointers(text);
  return source;
}

ConfigSource LoadConfigSource(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file", "", 0);
  std::ostringstream contents;
  contents << in.rdbuf();
  return ParseConfigSource(contents.str(), path);
}

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSgd: return "sgd";
    case Algorithm::kClippedSgd: return "clipped_sgd";
    case Algorithm::kQcSgd: return "qc_sgd";
    case Algorithm::kDpQcSgd: return "dp_qc_sgd";
  }
  return "unknown";
}

RunConfig BuildRunConfig(const ConfigSource& source) {
  try {
    return Build(source.document);
  } catch (const FieldError& e) {
    const int line = LineOf(source, e.pointer);
    throw ConfigError(Locate(source.name, line) + ": " + e.pointer + ": " +
                          e.message,
                      e.pointer, line);
  }
}

std::string ConfigHash(const RunConfig& config) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : config.canonical.dump()) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace qclab
