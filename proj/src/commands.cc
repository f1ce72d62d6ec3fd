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
#include "qclab/commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "qclab/bounds.h"
#include "qclab/config.h"
#include "qclab/errors.h"
#include "qclab/optimizer.h"
#include "qclab/parallel.h"
#include "qclab/privacy.h"
#include "qclab/schedule.h"
#include "qclab/trace_io.h"
#include "qclab/verification.h"

namespace qclab {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct SeedResult {
  uint64_t seed = 0;
  double stationarity = 0.0;
  double final_f = 0.0;
  double min_grad_norm_sq = 0.0;
  int64_t clipped_count = 0;
};

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;  // zero for a single value
};

MeanStderr Summarize(const std::vector<double>& values) {
  MeanStderr result;
  const double n = static_cast<double>(values.size());
  for (double v : values) result.mean += v;
  result.mean /= n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - result.mean) * (v - result.mean);
    result.stderr_ = std::sqrt(ss / (n - 1.0) / n);
  }
  return result;
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

void ApplyOverrides(RunConfig& config, const CommandOptions& options) {
  if (options.out_dir.has_value()) config.output_dir = *options.out_dir;
  if (options.seed_list.has_value()) {
    config.seeds = *options.seed_list;
  } else if (options.seed_count.has_value()) {
    config.seeds.clear();
    for (int64_t s = 0; s < *options.seed_count; ++s) {
      config.seeds.push_back(static_cast<uint64_t>(s));
    }
  }
  config.canonical["seeds"] = config.seeds;
}

// Returns an error message for invalid seed flags, empty when fine.
std::string CheckSeedOptions(const CommandOptions& options) {
  if (options.seed_count.has_value() && *options.seed_count < 1) {
    return "--seeds must be >= 1";
  }
  if (options.seed_list.has_value()) {
    if (options.seed_list->empty()) return "--seed-list must not be empty";
    std::vector<uint64_t> sorted = *options.seed_list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return "--seed-list contains a duplicate seed";
    }
  }
  return "";
}

RunTrace Execute(const RunConfig& config, uint64_t seed) {
  OptimizerConfig optimizer = config.optimizer;
  optimizer.seed = seed;
  switch (config.algorithm) {
    case Algorithm::kSgd:
      return RunSgd(*config.problem, optimizer);
    case Algorithm::kClippedSgd:
      return RunClippedSgd(*config.problem, optimizer);
    case Algorithm::kQcSgd:
      return RunQcSgd(*config.problem, optimizer);
    case Algorithm::kDpQcSgd:
      return RunDpQcSgd(*config.problem, optimizer, *config.dp);
  }
  throw InvalidArgumentError("unknown algorithm");
}

SeedResult Measure(const RunConfig& config, uint64_t seed,
                   const RunTrace& trace) {
  SeedResult result;
  result.seed = seed;
  result.stationarity = StationarityMeasure(trace, config.c);
  result.final_f = trace.final_f;
  result.min_grad_norm_sq = trace.min_grad_norm_sq;
  result.clipped_count = trace.clipped_count;
  return result;
}

std::string TraceFileName(const RunConfig& config, uint64_t seed) {
  return config.output_prefix + "_seed" + std::to_string(seed) + ".csv";
}

json SeedSummary(const std::vector<SeedResult>& results) {
  std::vector<double> stationarity;
  std::vector<double> final_f;
  json out;
  out["seeds"] = json::array();
  out["stationarity"] = json::array();
  out["final_f"] = json::array();
  out["min_grad_norm_sq"] = json::array();
  out["clipped_count"] = json::array();
  for (const SeedResult& r : results) {
    stationarity.push_back(r.stationarity);
    final_f.push_back(r.final_f);
    out["seeds"].push_back(r.seed);
    out["stationarity"].push_back(r.stationarity);
    out["final_f"].push_back(r.final_f);
    out["min_grad_norm_sq"].push_back(r.min_grad_norm_sq);
    out["clipped_count"].push_back(r.clipped_count);
  }
  const MeanStderr s = Summarize(stationarity);
  out["mean_stationarity"] = s.mean;
  out["stderr_stationarity"] = s.stderr_;
  out["mean_final_f"] = Summarize(final_f).mean;
  return out;
}

// Loads, validates and applies CLI overrides; ConfigError on failure.
RunConfig LoadRunConfig(const std::string& path, const CommandOptions& options) {
  RunConfig config = BuildRunConfig(LoadConfigSource(path));
  ApplyOverrides(config, options);
  return config;
}

// Constant-parameter bound terms for the sweep table, when they apply.
std::optional<BoundTerms> SweepBoundTerms(const RunConfig& config) {
  const bool quantile = config.algorithm == Algorithm::kQcSgd ||
                        config.algorithm == Algorithm::kDpQcSgd;
  if (!quantile || !config.beta.has_value()) return std::nullopt;
  const OptimizerConfig& optimizer = config.optimizer;
  if (optimizer.steps.kind() != ScheduleKind::kConstant ||
      optimizer.clip.quantiles.kind() != ScheduleKind::kConstant) {
    return std::nullopt;
  }
  const ProblemConstants constants = config.problem->constants();
  if (!constants.sigma_q.has_value()) return std::nullopt;
  BoundInputs inputs;
  inputs.f0_gap = config.problem->Value(optimizer.x0) - constants.f_inf;
  inputs.smoothness = constants.smoothness;
  inputs.sigma_q = *constants.sigma_q;
  inputs.q = constants.q;
  inputs.p = optimizer.clip.quantiles.p0();
  inputs.beta = *config.beta;
  inputs.c = config.c;
  inputs.gamma = optimizer.steps.gamma0();
  inputs.T = optimizer.T;
  try {
    if (config.algorithm == Algorithm::kQcSgd) return RhsCorollary1(inputs);
    inputs.B = config.dp->B;
    inputs.sigma_dp = config.dp->sigma_dp();
    return RhsTheorem2Terms(inputs);
  } catch (const InvalidArgumentError&) {
    return std::nullopt;
  }
}

// Pointer of the config value an axis replaces.
std::string AxisPointer(const std::string& axis) {
  if (axis == "gamma") return "/optimizer/step/gamma0";
  if (axis == "p") return "/optimizer/quantile/p0";
  if (axis == "B") return "/dp/B";
  if (axis == "sigma_dp") return "/dp/sigma_dp";
  if (axis == "T") return "/optimizer/T";
  return "";
}

std::string CheckAxis(const std::string& axis, const std::vector<double>& values,
                      Algorithm algorithm) {
  if (AxisPointer(axis).empty()) {
    return "unknown sweep axis \"" + axis +
           "\"; expected gamma, p, B, sigma_dp or T";
  }
  if (values.empty()) return "--values must list at least one value";
  const bool quantile =
      algorithm == Algorithm::kQcSgd || algorithm == Algorithm::kDpQcSgd;
  if (axis == "p" && !quantile) {
    return "axis p needs algorithm qc_sgd or dp_qc_sgd";
  }
  if ((axis == "B" || axis == "sigma_dp") && algorithm != Algorithm::kDpQcSgd) {
    return "axis " + axis + " needs algorithm dp_qc_sgd";
  }
  for (double v : values) {
    if (!std::isfinite(v)) return "sweep values must be finite";
    if ((axis == "B" || axis == "T") &&
        (std::floor(v) != v || v < 1.0 || v > 1e15)) {
      return "axis " + axis + " takes positive integers";
    }
  }
  return "";
}

}  // namespace

int RunCommand(const std::string& config_path, const CommandOptions& options,
               std::ostream& out, std::ostream& err) {
  if (const std::string problem = CheckSeedOptions(options); !problem.empty()) {
    err << "error: " << problem << "\n";
    return kExitConfigError;
  }
  RunConfig config;
  try {
    config = LoadRunConfig(config_path, options);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  const fs::path dir(config.output_dir);
  std::vector<SeedResult> results(config.seeds.size());
  try {
    ParallelFor(static_cast<int64_t>(config.seeds.size()), options.jobs,
                [&](int64_t i) {
                  const uint64_t seed = config.seeds[static_cast<std::size_t>(i)];
                  const RunTrace trace = Execute(config, seed);
                  WriteFileAtomic(dir / TraceFileName(config, seed),
                                  TraceCsv(trace));
                  results[static_cast<std::size_t>(i)] =
                      Measure(config, seed, trace);
                });
  } catch (const DivergenceError& e) {
    err << "error: divergence at iteration " << e.iteration() << ": "
        << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  json summary = SeedSummary(results);
  summary["config_hash"] = ConfigHash(config);
  summary["algorithm"] = AlgorithmName(config.algorithm);
  summary["problem"] = config.problem->Describe();
  summary["c"] = config.c;
  summary["T"] = config.optimizer.T;
  summary["traces"] = json::array();
  for (uint64_t seed : config.seeds) {
    summary["traces"].push_back(TraceFileName(config, seed));
  }
  if (config.dp.has_value()) summary["sigma_dp"] = config.dp->sigma_dp();

  json metadata;
  metadata["created_utc"] = UtcTimestamp();
  metadata["config_path"] = config_path;
  metadata["jobs"] = options.jobs;
  try {
    WriteFileAtomic(dir / (config.output_prefix + "_summary.json"),
                    summary.dump(2) + "\n");
    WriteFileAtomic(dir / (config.output_prefix + "_metadata.json"),
                    metadata.dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  out << "wrote " << results.size() << " trace(s) to " << dir.string()
      << "; mean stationarity " << FormatNumber(summary["mean_stationarity"])
      << " (stderr " << FormatNumber(summary["stderr_stationarity"]) << ")\n";
  return kExitOk;
}

int SweepCommand(const std::string& config_path, const std::string& axis,
                 const std::vector<double>& values,
                 const CommandOptions& options, std::ostream& out,
                 std::ostream& err) {
  if (const std::string problem = CheckSeedOptions(options); !problem.empty()) {
    err << "error: " << problem << "\n";
    return kExitConfigError;
  }
  std::vector<RunConfig> points;
  RunConfig base;
  try {
    const ConfigSource source = LoadConfigSource(config_path);
    base = BuildRunConfig(source);
    ApplyOverrides(base, options);
    if (const std::string problem = CheckAxis(axis, values, base.algorithm);
        !problem.empty()) {
      err << "error: sweep: " << problem << "\n";
      return kExitConfigError;
    }
    const json::json_pointer pointer(AxisPointer(axis));
    for (double value : values) {
      ConfigSource point = source;
      if (axis == "B" || axis == "T") {
        point.document[pointer] = static_cast<int64_t>(value);
      } else {
        point.document[pointer] = value;
      }
      RunConfig config = BuildRunConfig(point);
      ApplyOverrides(config, options);
      points.push_back(std::move(config));
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  const std::size_t n_seeds = base.seeds.size();
  std::vector<SeedResult> results(points.size() * n_seeds);
  try {
    ParallelFor(static_cast<int64_t>(results.size()), options.jobs,
                [&](int64_t i) {
                  const RunConfig& config =
                      points[static_cast<std::size_t>(i) / n_seeds];
                  const uint64_t seed =
                      config.seeds[static_cast<std::size_t>(i) % n_seeds];
                  results[static_cast<std::size_t>(i)] =
                      Measure(config, seed, Execute(config, seed));
                });
  } catch (const DivergenceError& e) {
    err << "error: divergence at iteration " << e.iteration() << ": "
        << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::string table =
      "axis,value,mean_stationarity,stderr,mean_final_f,rhs_term1,rhs_term2,"
      "rhs_term3\n";
  json summary;
  summary["axis"] = axis;
  summary["config_hash"] = ConfigHash(base);
  summary["points"] = json::array();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < points.size(); ++k) {
    const std::vector<SeedResult> slice(
        results.begin() + static_cast<std::ptrdiff_t>(k * n_seeds),
        results.begin() + static_cast<std::ptrdiff_t>((k + 1) * n_seeds));
    json point = SeedSummary(slice);
    point["value"] = values[k];
    point["config_hash"] = ConfigHash(points[k]);
    const std::optional<BoundTerms> terms = SweepBoundTerms(points[k]);
    const double rhs[3] = {terms ? terms->optimization : nan,
                           terms ? terms->variance : nan,
                           terms ? terms->bias : nan};
    if (terms.has_value()) {
      point["rhs_terms"] = {terms->optimization, terms->variance, terms->bias};
      point["rhs_total"] = terms->total;
    }
    table += axis + "," + FormatNumber(values[k]) + "," +
             FormatNumber(point["mean_stationarity"]) + "," +
             FormatNumber(point["stderr_stationarity"]) + "," +
             FormatNumber(point["mean_final_f"]);
    for (double term : rhs) table += "," + FormatNumber(term);
    table += "\n";
    summary["points"].push_back(std::move(point));
  }

  const fs::path dir(base.output_dir);
  const std::string stem = base.output_prefix + "_sweep_" + axis;
  try {
    WriteFileAtomic(dir / (stem + ".csv"), table);
    WriteFileAtomic(dir / (stem + "_summary.json"), summary.dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  out << table;
  return kExitOk;
}

int VerifyCommand(const std::string& suite, const CommandOptions& options,
                  std::ostream& out, std::ostream& err) {
  if (!IsSuiteSelector(suite)) {
    err << "error: unknown suite \"" << suite
        << "\"; expected lemma1, lemma2, theorem1, theorem2, bias_example or "
           "all\n";
    return kExitConfigError;
  }
  std::vector<SuiteReport> reports;
  try {
    reports = RunSuites(suite, options.jobs);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }

  json report;
  report["suite"] = suite;
  report["suites"] = json::array();
  bool all_passed = true;
  for (const SuiteReport& r : reports) {
    json entry;
    entry["suite"] = r.suite;
    entry["passed"] = r.passed();
    entry["seconds"] = r.seconds;
    entry["checks"] = json::array();
    for (const CheckResult& check : r.checks) {
      entry["checks"].push_back({{"check", check.name},
                                 {"measured", check.measured},
                                 {"bound", check.bound},
                                 {"margin", check.margin},
                                 {"pass", check.pass}});
    }
    report["suites"].push_back(std::move(entry));
    all_passed = all_passed && r.passed();

    char seconds[32];
    std::snprintf(seconds, sizeof(seconds), "%.1f", r.seconds);
    out << r.suite << ": " << (r.checks.size() - r.failures()) << "/"
        << r.checks.size() << " checks passed (" << seconds << " s)\n";
    for (const CheckResult& check : r.checks) {
      if (check.pass) continue;
      out << "  FAIL " << check.name << ": measured "
          << FormatNumber(check.measured) << ", bound "
          << FormatNumber(check.bound) << "\n";
    }
  }
  report["passed"] = all_passed;

  const fs::path dir(options.out_dir.value_or("."));
  try {
    WriteFileAtomic(dir / ("verify_" + suite + ".json"),
                    report.dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

int ScheduleCommand(double q, std::ostream& out, std::ostream& err) {
  ScheduleExponents exponents;
  try {
    exponents = OptimalScheduleExponents(q);
  } catch (const InvalidArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  out << "q = " << FormatNumber(q) << "\n"
      << "theta = " << FormatNumber(exponents.theta) << "\n"
      << "nu = " << FormatNumber(exponents.nu) << "\n"
      << "gamma_t = gamma0 * (t+1)^" << exponents.theta - 1.0 << "\n"
      << "1 - p_t = (1 - p0) * (t+1)^" << exponents.nu << "\n";
  return kExitOk;
}

}  // namespace qclab
