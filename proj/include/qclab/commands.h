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
#ifndef QCLAB_COMMANDS_H_
#define QCLAB_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qclab {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitDivergence = 2,
  kExitVerificationFailed = 3,
};

struct CommandOptions {
  // Replaces output.dir from the config (run, sweep) or the report
  // directory (verify, default ".").
  std::optional<std::string> out_dir;
  // Seeds 0 .. N-1; takes precedence over the config's seed list.
  std::optional<int64_t> seed_count;
  std::optional<std::vector<uint64_t>> seed_list;
  int jobs = 1;
};

// Runs the configured optimizer once per seed. Writes
//   <dir>/<prefix>_seed<seed>.csv   trace per seed
//   <dir>/<prefix>_summary.json     config hash, per-seed stationarity
//                                   measures and final values, means and
//                                   standard errors
//   <dir>/<prefix>_metadata.json    creation time and invocation details
int RunCommand(const std::string& config_path, const CommandOptions& options,
               std::ostream& out, std::ostream& err);

// Reruns the config for each value of one axis (gamma, p, B, sigma_dp, T)
// and every seed, writing <dir>/<prefix>_sweep_<axis>.csv with columns
//   axis,value,mean_stationarity,stderr,mean_final_f,rhs_term1,rhs_term2,
//   rhs_term3
// plus a JSON summary. The rhs columns hold the constant-parameter bound
// terms when analysis.beta is set and the bound applies, nan otherwise.
int SweepCommand(const std::string& config_path, const std::string& axis,
                 const std::vector<double>& values,
                 const CommandOptions& options, std::ostream& out,
                 std::ostream& err);

// Runs a built-in verification suite (or "all") and writes
// <dir>/verify_<suite>.json. Exit 0 iff every check passes.
int VerifyCommand(const std::string& suite, const CommandOptions& options,
                  std::ostream& out, std::ostream& err);

// Prints the step and quantile schedule exponents for tail order q.
int ScheduleCommand(double q, std::ostream& out, std::ostream& err);

}  // namespace qclab

#endif  // QCLAB_COMMANDS_H_
