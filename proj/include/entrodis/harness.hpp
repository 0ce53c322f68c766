// Copyright 2026 The Entrodis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "entrodis/channel.hpp"
#include "entrodis/random.hpp"

namespace entrodis::harness {

// Randomized verification sweeps. Every check encodes an exact theorem, so
// the expected failure count is zero: a failing trial means an
// implementation defect, and the result carries everything needed to replay
// it (the trial's derived seed plus the serialized instance).

struct SweepConfig {
  std::vector<std::size_t> dims{2, 3, 4};
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_kraus;  // per-dim default: d*d
  double tolerance = 1e-8;
  std::vector<std::string> checks;  // empty = all, in canonical order
  std::string output_path;          // JSON path; CSV lands next to it
};

/// Throws ValidationError when the configuration is unusable.
void validate(const SweepConfig& cfg);

/// Canonical check names, in execution order.
const std::vector<std::string>& all_check_names();

struct FailingInstance {
  std::size_t dim = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // derived trial seed; replays the instance alone
  std::string kind;        // name of the violated inequality
  double slack = 0.0;
  nlohmann::json instrument;
  nlohmann::json state;
};

struct TrialRecord {
  std::size_t dim = 0;
  std::size_t trial = 0;
  double slack = 0.0;
  bool pass = true;
};

struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_slack = 0.0;
  std::vector<FailingInstance> failing;
  std::vector<TrialRecord> records;
  /// Cross-trial quantities (e.g. worst perturbation gap per epsilon).
  std::map<std::string, double> aggregates;
  /// False when a cross-trial requirement (the epsilon ladder) is violated.
  bool aggregate_ok = true;

  bool passed() const { return failures == 0 && aggregate_ok; }
};

struct SweepResult {
  SweepConfig config;
  std::vector<CheckResult> checks;
  double duration_s = 0.0;

  bool all_passed() const;
};

CheckResult check_tradeoff(const SweepConfig& cfg);
CheckResult check_equality_cases(const SweepConfig& cfg);
CheckResult check_monotonicity(const SweepConfig& cfg);
CheckResult check_continuity(const SweepConfig& cfg);
CheckResult check_state_independent(const SweepConfig& cfg);
CheckResult check_fidelity_critique(const SweepConfig& cfg);

/// Runs the enabled checks, writes the JSON and CSV reports when
/// output_path is set.
SweepResult run_all(const SweepConfig& cfg);

nlohmann::json report_json(const SweepResult& result, bool include_duration = true);
std::string report_csv(const SweepResult& result);
void write_report(const SweepResult& result, const std::string& json_path);

/// 0 when everything passed, 1 on any check failure.
int exit_code(const SweepResult& result);

// Instance samplers, shared with the test suites.
DensityMatrix sample_density(std::size_t d, Rng& rng);
/// Haar isometry into output (x) probe, sliced into 1..max_kraus Kraus
/// operators and coarse-grained into a random outcome partition.
Instrument sample_instrument(std::size_t d, std::size_t max_kraus, Rng& rng);
/// Same but never a single-Kraus (unitary) channel.
Instrument sample_noisy_instrument(std::size_t d, std::size_t max_kraus, Rng& rng);

}  // namespace entrodis::harness
