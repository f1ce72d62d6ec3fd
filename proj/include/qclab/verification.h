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
#ifndef QCLAB_VERIFICATION_H_
#define QCLAB_VERIFICATION_H_

#include <string>
#include <string_view>
#include <vector>

namespace qclab {

// One inequality evaluated by a verification suite. For upper checks the
// margin is bound - measured, for lower checks measured - bound; a check
// passes when its margin is non-negative.
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
};

CheckResult UpperCheck(std::string name, double measured, double bound);
CheckResult LowerCheck(std::string name, double measured, double bound);

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  int failures() const;
  bool passed() const { return failures() == 0 && !checks.empty(); }
};

// lemma1, lemma2, theorem1, theorem2, bias_example.
const std::vector<std::string>& SuiteNames();
// A suite name or "all".
bool IsSuiteSelector(std::string_view name);

// Runs one suite with its built-in configuration. Seeds within a suite are
// spread over `jobs` threads; results do not depend on `jobs`.
SuiteReport RunSuite(std::string_view name, int jobs);
// Runs one suite, or every suite in SuiteNames() order for "all".
std::vector<SuiteReport> RunSuites(std::string_view selector, int jobs);

}  // namespace qclab

#endif  // QCLAB_VERIFICATION_H_
