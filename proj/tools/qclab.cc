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
// qclab: run, sweep and verify quantile-clipped SGD experiments.

#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qclab/commands.h"
#include "qclab/parallel.h"

namespace {

void AddCommonFlags(CLI::App& command, qclab::CommandOptions& options,
                    bool seeds) {
  command.add_option("--out", options.out_dir, "Output directory");
  command.add_option("--jobs", options.jobs,
                     "Worker threads (default: QCLAB_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  if (!seeds) return;
  CLI::Option* count =
      command.add_option("--seeds", options.seed_count, "Use seeds 0..N-1");
  CLI::Option* list = command
                          .add_option("--seed-list", options.seed_list,
                                      "Comma-separated seeds")
                          ->delimiter(',');
  count->excludes(list);
}

// Splits "0.1,0.01" into numbers; an empty string gives an empty list.
bool ParseValueList(const std::string& text, std::vector<double>& values) {
  values.clear();
  if (text.empty()) return true;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return !text.ends_with(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantile-clipped SGD experiment driver"};
  app.require_subcommand(1);

  qclab::CommandOptions options;
  options.jobs = qclab::DefaultJobs();

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "Run a configuration per seed");
  run->add_option("--config", config_path, "Run configuration (JSON)")
      ->required();
  AddCommonFlags(*run, options, true);

  std::string axis;
  std::string values;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Sweep one parameter of a configuration");
  sweep->add_option("--config", config_path, "Run configuration (JSON)")
      ->required();
  sweep->add_option("--axis", axis, "gamma, p, B, sigma_dp or T")->required();
  sweep->add_option("--values", values, "Comma-separated axis values")
      ->required();
  AddCommonFlags(*sweep, options, true);

  std::string suite = "all";
  CLI::App* verify =
      app.add_subcommand("verify", "Run built-in verification suites");
  verify->add_option("suite", suite,
                     "lemma1, lemma2, theorem1, theorem2, bias_example or all");
  AddCommonFlags(*verify, options, false);

  double q = 2.0;
  CLI::App* schedule =
      app.add_subcommand("schedule", "Print schedule exponents for q");
  schedule->add_option("--q", q, "Noise moment order in (1, 2]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qclab::kExitConfigError;
  }

  if (*run) return qclab::RunCommand(config_path, options, std::cout, std::cerr);
  if (*sweep) {
    std::vector<double> parsed;
    if (!ParseValueList(values, parsed)) {
      std::cerr << "error: --values: expected comma-separated numbers\n";
      return qclab::kExitConfigError;
    }
    return qclab::SweepCommand(config_path, axis, parsed, options, std::cout,
                               std::cerr);
  }
  if (*verify) return qclab::VerifyCommand(suite, options, std::cout, std::cerr);
  return qclab::ScheduleCommand(q, std::cout, std::cerr);
}
