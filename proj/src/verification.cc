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
#include "qclab/verification.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <utility>

#include "qclab/analysis.h"
#include "qclab/bounds.h"
#include "qclab/clipping.h"
#include "qclab/errors.h"
#include "qclab/optimizer.h"
#include "qclab/parallel.h"
#include "qclab/privacy.h"
#include "qclab/quadratic_problem.h"
#include "qclab/rng.h"
#include "qclab/schedule.h"
#include "qclab/two_point_problem.h"

namespace qclab {
namespace {

constexpr int kSeeds = 20;
constexpr int kStates = 20;
constexpr int kLemma2States = 10;
constexpr uint64_t kStateSeed = 20260417;
constexpr double kTauSlack = 1.05;
constexpr double kStderrSlack = 4.0;
constexpr double kTheorem2Slack = 2.0;
constexpr int64_t kTheoremHorizon = 10000;
constexpr int64_t kPlateauHorizon = 100000;
constexpr double kPlateauFloor = 0.1;
constexpr double kPlateauRatio = 3.0;

// Two-point example used throughout: r = 2, omega = 3/4.
constexpr double kTwoPointR = 2.0;
constexpr double kTwoPointOmega = 0.75;

std::string Fmt(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string Index(int i) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%02d", i);
  return buffer;
}

QuadraticProblem MakeQuadratic(const ParamVector& curvature, double sigma) {
  const ParamVector target(curvature.dim(), 0.0);
  return QuadraticProblem(
      curvature, target,
      sigma > 0.0 ? NoiseModel::Gaussian(sigma) : NoiseModel::None());
}

ParamVector UniformPoint(std::size_t dim, double lo, double hi,
                         RngStream& rng) {
  ParamVector x(dim);
  for (std::size_t k = 0; k < dim; ++k) x[k] = lo + (hi - lo) * rng.Uniform();
  return x;
}

// Evaluates fn(seed) for seeds 0 .. kSeeds-1.
std::vector<double> PerSeed(int jobs,
                            const std::function<double(uint64_t)>& fn) {
  std::vector<double> values(kSeeds);
  ParallelFor(kSeeds, jobs, [&](int64_t i) {
    values[static_cast<std::size_t>(i)] = fn(static_cast<uint64_t>(i));
  });
  return values;
}

double Mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

CheckResult StrictUpperCheck(std::string name, double measured, double bound) {
  CheckResult check = UpperCheck(std::move(name), measured, bound);
  check.pass = check.margin > 0.0;
  return check;
}

SuiteReport Lemma1Suite(int jobs) {
  const QuadraticProblem quadratic =
      MakeQuadratic(ParamVector(10, 1.0), 1.0);
  const TwoPointProblem two_point(kTwoPointR, kTwoPointOmega);
  struct Probe {
    const StochasticProblem* problem;
    std::string label;
    int index;
    ParamVector x;
  };
  std::vector<Probe> probes;
  RngStream states(kStateSeed, StreamId::kDataSampling);
  for (int i = 0; i < kStates; ++i) {
    probes.push_back(
        {&quadratic, "quadratic_d10", i, UniformPoint(10, -3.0, 3.0, states)});
  }
  for (int i = 0; i < kStates; ++i) {
    probes.push_back(
        {&two_point, "two_point", i, UniformPoint(1, -4.0, 2.0, states)});
  }

  const double ps[] = {0.5, 0.75, 0.9};
  const double q = 2.0;
  const int64_t n_cases = static_cast<int64_t>(probes.size()) * 3;
  std::vector<std::pair<CheckResult, CheckResult>> results(
      static_cast<std::size_t>(n_cases));
  ParallelFor(n_cases, jobs, [&](int64_t k) {
    const Probe& probe = probes[static_cast<std::size_t>(k / 3)];
    const double p = ps[k % 3];
    const double h = 1.0 - p;
    const double sigma_q = probe.problem->SigmaQ();
    RngStream rng(static_cast<uint64_t>(k), StreamId::kQuantileEstimation);
    const ThresholdOptions options;
    const std::string suffix =
        probe.label + "/p=" + Fmt(p) + "/point" + Index(probe.index);

    const double grad_norm = probe.problem->ExactGradient(probe.x).Norm();
    const double tau =
        EstimateThreshold(*probe.problem, probe.x, p, options, rng).tau;
    const double tau_bound =
        grad_norm + kTauSlack * sigma_q * std::pow(h, -1.0 / q);

    const BiasEstimate bias = EmpiricalBias(*probe.problem, probe.x, p,
                                            kMinBiasSamples, options, rng);
    const double bias_bound =
        BiasUpperBound(sigma_q, p, q) + kStderrSlack * bias.bias_stderr;
    results[static_cast<std::size_t>(k)] = {
        UpperCheck("tau/" + suffix, tau, tau_bound),
        UpperCheck("bias/" + suffix, bias.bias_norm, bias_bound)};
  });

  SuiteReport report;
  for (auto& [tau_check, bias_check] : results) {
    report.checks.push_back(std::move(tau_check));
    report.checks.push_back(std::move(bias_check));
  }
  return report;
}

SuiteReport Lemma2Suite(int jobs) {
  const QuadraticProblem quadratic = MakeQuadratic(ParamVector{1.0, 0.5}, 1.0);
  const TwoPointProblem two_point(kTwoPointR, kTwoPointOmega);
  const double gamma = 0.1;
  const double p = 0.75;
  const double beta = 0.5;

  struct State {
    const StochasticProblem* problem;
    std::string label;
    int index;
    ParamVector x;
    ThresholdOptions threshold;
  };
  std::vector<State> states;
  RngStream sampler(kStateSeed + 1, StreamId::kDataSampling);
  for (int i = 0; i < kLemma2States; ++i) {
    states.push_back({&quadratic, "quadratic_d2", i,
                      UniformPoint(2, -3.0, 3.0, sampler),
                      ThresholdOptions{4096, false}});
  }
  for (int i = 0; i < kLemma2States; ++i) {
    states.push_back({&two_point, "two_point", i,
                      UniformPoint(1, -4.0, 2.0, sampler),
                      ThresholdOptions{kDefaultThresholdSamples, true}});
  }

  std::vector<CheckResult> results(states.size());
  ParallelFor(static_cast<int64_t>(states.size()), jobs, [&](int64_t k) {
    const State& state = states[static_cast<std::size_t>(k)];
    RngStream rng(static_cast<uint64_t>(k), StreamId::kDataSampling);
    const Lemma2Result result =
        Lemma2Check(*state.problem, state.x, gamma, p, beta,
                    kMinLemma2Samples, state.threshold, rng);
    results[static_cast<std::size_t>(k)] = UpperCheck(
        "mc/" + state.label + "/state" + Index(state.index), result.lhs,
        result.rhs + kStderrSlack * result.lhs_stderr);
  });

  SuiteReport report;
  report.checks = std::move(results);
  for (const State& state : states) {
    if (state.problem != &two_point) continue;
    const Lemma2Result exact =
        Lemma2CheckExactTwoPoint(two_point, state.x[0], gamma, p, beta);
    report.checks.push_back(UpperCheck(
        "exact/two_point/state" + Index(state.index), exact.lhs, exact.rhs));
  }
  return report;
}

struct TheoremSetting {
  double sigma;
  double p;
  double beta;
  double c;
  double gamma;
};

const ParamVector& TheoremCurvature() {
  static const ParamVector curvature{1.0, 0.5};
  return curvature;
}

const ParamVector& TheoremStart() {
  static const ParamVector x0{3.0, -2.0};
  return x0;
}

BoundInputs TheoremInputs(const QuadraticProblem& problem,
                          const TheoremSetting& s) {
  const ProblemConstants constants = problem.constants();
  BoundInputs inputs;
  inputs.f0_gap = problem.Value(TheoremStart()) - constants.f_inf;
  inputs.smoothness = constants.smoothness;
  inputs.sigma_q = problem.SigmaQ();
  inputs.q = constants.q;
  inputs.p = s.p;
  inputs.beta = s.beta;
  inputs.c = s.c;
  inputs.gamma = s.gamma;
  inputs.T = kTheoremHorizon;
  return inputs;
}

OptimizerConfig TheoremConfig(StepSchedule steps, QuantileSchedule quantiles) {
  OptimizerConfig config;
  config.clip = ClipConfig::Quantile(quantiles);
  config.steps = steps;
  config.T = kTheoremHorizon;
  config.x0 = TheoremStart();
  config.trace_every = kTheoremHorizon;
  return config;
}

SuiteReport Theorem1Suite(int jobs) {
  const TheoremSetting settings[] = {
      {1.0, 0.9, 0.2, 0.2, 0.1},
      {1.0, 0.75, 0.3, 0.3, 0.2},
      {1.0, 0.5, 0.25, 0.25, 0.05},
      {0.0, 0.9, 0.2, 0.2, 0.1},
  };
  SuiteReport report;
  for (const TheoremSetting& s : settings) {
    const QuadraticProblem problem = MakeQuadratic(TheoremCurvature(), s.sigma);
    const OptimizerConfig base = TheoremConfig(StepSchedule::Constant(s.gamma),
                                               QuantileSchedule::Constant(s.p));
    const std::vector<double> measures = PerSeed(jobs, [&](uint64_t seed) {
      OptimizerConfig config = base;
      config.seed = seed;
      return StationarityMeasure(RunQcSgd(problem, config), s.c);
    });
    const BoundTerms terms = RhsCorollary1(TheoremInputs(problem, s));
    report.checks.push_back(
        UpperCheck("corollary1/sigma=" + Fmt(s.sigma) + ",p=" + Fmt(s.p) +
                       ",beta=" + Fmt(s.beta) + ",c=" + Fmt(s.c) +
                       ",gamma=" + Fmt(s.gamma),
                   Mean(measures), terms.total));
  }

  // Decaying step and growing quantile against the general bound.
  const TheoremSetting s{1.0, 0.9, 0.2, 0.2, 0.3};
  const QuadraticProblem problem = MakeQuadratic(TheoremCurvature(), s.sigma);
  const ScheduleExponents exponents = OptimalScheduleExponents(2.0);
  const StepSchedule steps = StepSchedule::Polynomial(s.gamma, exponents.theta);
  const QuantileSchedule quantiles =
      QuantileSchedule::Polynomial(s.p, exponents.nu);
  const OptimizerConfig base = TheoremConfig(steps, quantiles);
  const std::vector<double> measures = PerSeed(jobs, [&](uint64_t seed) {
    OptimizerConfig config = base;
    config.seed = seed;
    return StationarityMeasure(RunQcSgd(problem, config), s.c);
  });
  report.checks.push_back(
      UpperCheck("theorem1/polynomial_schedule", Mean(measures),
                 RhsTheorem1(TheoremInputs(problem, s), steps, quantiles)));
  return report;
}

SuiteReport Theorem2Suite(int jobs) {
  struct DpSetting {
    int64_t B;
    double sigma_dp;
    double gamma;
  };
  const DpSetting settings[] = {{1, 0.5, 0.1}, {16, 0.5, 0.2}, {16, 2.0, 0.05}};
  SuiteReport report;
  for (const DpSetting& d : settings) {
    const TheoremSetting s{1.0, 0.9, 0.2, 0.2, d.gamma};
    const QuadraticProblem problem = MakeQuadratic(TheoremCurvature(), s.sigma);
    const OptimizerConfig base = TheoremConfig(StepSchedule::Constant(s.gamma),
                                               QuantileSchedule::Constant(s.p));
    DpConfig dp;
    dp.B = d.B;
    dp.T = kTheoremHorizon;
    dp.override_sigma_dp = d.sigma_dp;
    const std::vector<double> measures = PerSeed(jobs, [&](uint64_t seed) {
      OptimizerConfig config = base;
      config.seed = seed;
      return StationarityMeasure(RunDpQcSgd(problem, config, dp), s.c);
    });
    BoundInputs inputs = TheoremInputs(problem, s);
    inputs.B = d.B;
    inputs.sigma_dp = d.sigma_dp;
    report.checks.push_back(
        UpperCheck("theorem2/B=" + std::to_string(d.B) +
                       ",sigma_dp=" + Fmt(d.sigma_dp) + ",gamma=" + Fmt(d.gamma),
                   Mean(measures), kTheorem2Slack * RhsTheorem2(inputs)));
  }
  return report;
}

// Mean of |grad f(x^t)| over recorded rows in the second half of the run.
double TailMeanGradNorm(const RunTrace& trace) {
  double sum = 0.0;
  int64_t count = 0;
  for (const TraceRow& row : trace.rows) {
    if (2 * row.iter < trace.iterations) continue;
    sum += std::sqrt(row.grad_norm_sq);
    ++count;
  }
  Require(count > 0, "tail average: no recorded rows in the second half");
  return sum / static_cast<double>(count);
}

SuiteReport BiasExampleSuite(int jobs) {
  const TwoPointProblem problem(kTwoPointR, kTwoPointOmega);
  const double p = 0.5;
  SuiteReport report;

  const double root = FixedPointTwoPoint(problem, p);
  report.checks.push_back(LowerCheck("oracle/grad_norm_at_fixed_point",
                                     std::abs(problem.GradientAt(root)),
                                     kPlateauFloor));
  report.checks.push_back(
      UpperCheck("oracle/expected_update_at_fixed_point",
                 std::abs(ExpectedUpdateTwoPoint(root, problem, p)), 1e-9));
  report.checks.push_back(
      LowerCheck("oracle/distance_to_minimizer",
                 std::abs(root - problem.Minimizer()[0]), 1e-6));
  report.checks.push_back(UpperCheck(
      "closed_form/fixed_point_error_omega_0.75",
      std::abs(ClosedFormFixedPoint(kTwoPointOmega) - (-3.0)), 0.0));

  // Constant step: the gradient norm plateaus at a level set by the bias,
  // not by gamma.
  std::vector<double> floors;
  for (double gamma : {1e-1, 1e-2, 1e-3}) {
    OptimizerConfig base;
    base.clip = ClipConfig::Quantile(QuantileSchedule::Constant(p),
                                     ThresholdOptions{kDefaultThresholdSamples,
                                                      true});
    base.steps = StepSchedule::Constant(gamma);
    base.T = kPlateauHorizon;
    base.x0 = ParamVector{0.0};
    base.trace_every = 100;
    const std::vector<double> tails = PerSeed(jobs, [&](uint64_t seed) {
      OptimizerConfig config = base;
      config.seed = seed;
      return TailMeanGradNorm(RunQcSgd(problem, config));
    });
    floors.push_back(Mean(tails));
    report.checks.push_back(LowerCheck(
        "plateau/gamma=" + Fmt(gamma) + "/tail_grad_norm", floors.back(),
        kPlateauFloor));
  }
  const auto [lo, hi] = std::minmax_element(floors.begin(), floors.end());
  report.checks.push_back(
      UpperCheck("plateau/floor_ratio", *hi / *lo, kPlateauRatio));

  // Decaying step with p_t -> 1 removes the plateau.
  const ScheduleExponents exponents = OptimalScheduleExponents(2.0);
  std::vector<double> minima;
  const int64_t horizons[] = {1000, 10000, 100000};
  for (int64_t T : horizons) {
    OptimizerConfig base;
    base.clip = ClipConfig::Quantile(
        QuantileSchedule::Polynomial(0.5, exponents.nu),
        ThresholdOptions{kDefaultThresholdSamples, true});
    base.steps = StepSchedule::Polynomial(0.5, exponents.theta);
    base.T = T;
    base.x0 = ParamVector{0.0};
    base.trace_every = 1;
    const std::vector<double> values = PerSeed(jobs, [&](uint64_t seed) {
      OptimizerConfig config = base;
      config.seed = seed;
      return RunQcSgd(problem, config).min_grad_norm_sq;
    });
    minima.push_back(Mean(values));
  }
  report.checks.push_back(StrictUpperCheck(
      "schedule/min_grad_norm_sq/T=10000_below_T=1000", minima[1], minima[0]));
  report.checks.push_back(StrictUpperCheck(
      "schedule/min_grad_norm_sq/T=100000_below_T=10000", minima[2],
      minima[1]));
  report.checks.push_back(UpperCheck(
      "schedule/min_grad_norm_sq/T=100000_below_half_T=1000", minima[2],
      0.5 * minima[0]));
  return report;
}

}  // namespace

CheckResult UpperCheck(std::string name, double measured, double bound) {
  const double margin = bound - measured;
  return {std::move(name), measured, bound, margin, margin >= 0.0};
}

CheckResult LowerCheck(std::string name, double measured, double bound) {
  const double margin = measured - bound;
  return {std::move(name), measured, bound, margin, margin >= 0.0};
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckResult& check) { return !check.pass; }));
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "lemma1", "lemma2", "theorem1", "theorem2", "bias_example"};
  return names;
}

bool IsSuiteSelector(std::string_view name) {
  if (name == "all") return true;
  const std::vector<std::string>& names = SuiteNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport RunSuite(std::string_view name, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  if (name == "lemma1") {
    report = Lemma1Suite(jobs);
  } else if (name == "lemma2") {
    report = Lemma2Suite(jobs);
  } else if (name == "theorem1") {
    report = Theorem1Suite(jobs);
  } else if (name == "theorem2") {
    report = Theorem2Suite(jobs);
  } else if (name == "bias_example") {
    report = BiasExampleSuite(jobs);
  } else {
    throw InvalidArgumentError("verify: unknown suite '" + std::string(name) +
                               "'");
  }
  report.suite = std::string(name);
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::vector<SuiteReport> RunSuites(std::string_view selector, int jobs) {
  if (selector != "all") return {RunSuite(selector, jobs)};
  std::vector<SuiteReport> reports;
  for (const std::string& name : SuiteNames()) {
    reports.push_back(RunSuite(name, jobs));
  }
  return reports;
}

}  // namespace qclab
