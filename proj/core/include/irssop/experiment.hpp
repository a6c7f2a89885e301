// Copyright 2026 The irssop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irssop/ao.hpp"
#include "irssop/channel.hpp"

namespace irssop {

enum class SweepAxis { kNone, kNs, kNt, kNe };

std::string_view to_string(SweepAxis axis);
/// "none", "ns", "nt", "ne" (case-insensitive). Throws kParse.
SweepAxis parse_sweep_axis(std::string_view text);

/// Everything a command needs. Text form is flat "key = value" lines, '#'
/// starts a comment. Keys:
///
///   users nt ns ne snr_db rate seed
///   sweep values trials schemes
///   xi iter_max tau max_outer randomization sdp_method sdp_tol
///   mc_samples jobs timing
///
/// values and schemes are comma separated; sdp_method is "ipm" or
/// "admm"; timing is true/false.
struct ExperimentSpec {
  int num_users = 4;
  int bs_antennas = 10;
  int irs_elements = 32;
  int eve_antennas = 2;
  double snr_db = 1.0;
  double rate = 2.0;
  std::uint64_t seed = 1;

  SweepAxis axis = SweepAxis::kNone;
  std::vector<int> values;
  int trials = 20;
  std::vector<Scheme> schemes = {Scheme::kMmSop};

  AOConfig ao;
  int mc_samples = 100000;
  int jobs = 0;  // 0: one per hardware thread
  bool timing = false;  // adds a wall-clock column; output is then not reproducible

  /// Base system with the axis set to \p value (ignored for kNone).
  SystemConfig system(std::optional<int> value = std::nullopt) const;
  /// Sweep points; a single empty point for kNone.
  std::vector<std::optional<int>> points() const;
  /// Throws kInvalidConfig.
  void validate() const;
};

/// Applies one key. Throws kParse for unknown keys or malformed values.
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);
/// Applies every "key = value" line; errors carry \p origin and the line.
void apply_config_text(ExperimentSpec& spec, std::string_view text,
                       std::string_view origin = "<config>");
void apply_config_file(ExperimentSpec& spec, const std::filesystem::path& path);
/// Resolved configuration in the same text form, readable by apply_config_text.
std::string describe(const ExperimentSpec& spec);

/// RFC 4180 field quoting; numbers are printed with 10 significant digits.
std::string csv_field(std::string_view text);
std::string csv_number(double value);

struct ValidateRow {
  int user = 0;
  double sinr = 0.0;
  double capacity = 0.0;
  double z = 0.0;
  double closed_form = 0.0;
  double empirical = 0.0;
  double gap = 0.0;
  double threshold = 0.0;  // 3 binomial standard errors + 0.005
  bool pass = false;
};

struct ValidateReport {
  std::vector<ValidateRow> rows;
  bool pass = true;
};

/// Closed-form outage against the empirical rate over mc_samples
/// eavesdropper draws, for random phases and the optimal receivers on the
/// channel of trial 0. Wiretap capacity is log2(1 + rho/sigma2_e |h_e + G_e Phi f|^2).
ValidateReport cmd_validate_sop(const ExperimentSpec& spec, std::ostream& csv);

struct OptimizeReport {
  std::vector<AOResult> results;  // one per scheme, in spec order
};

/// One AO per scheme on the channel of trial 0; one CSV row per iteration.
OptimizeReport cmd_optimize(const ExperimentSpec& spec, std::ostream& csv);

struct TrialOutcome {
  Scheme scheme = Scheme::kMmSop;
  std::optional<int> value;
  int trial = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;  // "<category>: message" when !ok
  int iterations = 0;
  bool converged = false;
  double initial_max_sop = 1.0;
  double max_sop = 1.0;
  double min_sop = 1.0;
  std::vector<double> sinr;
  double sdr_bound = 0.0;
  double wall_ms = 0.0;
};

/// A single sweep cell: channels from Rng(trial_seed(seed, trial), kChannels),
/// phases from a fresh Rng(trial_seed(seed, trial), kOptimizer).
TrialOutcome run_trial(const ExperimentSpec& spec, std::optional<int> value, int trial,
                       Scheme scheme);

struct Aggregate {
  std::string scheme;  // scheme name, or "paired" for mm-sinr minus mm-sop
  std::optional<int> value;
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  int nonnegative = 0;  // paired rows only
};

struct SweepReport {
  std::vector<TrialOutcome> trials;  // ordered by value, trial, scheme
  std::vector<Aggregate> aggregates;
  std::vector<std::string> warnings;
  const Aggregate* find(std::string_view scheme, std::optional<int> value) const;
};

/// Every point x trial x scheme, then per-point mean and std of max SOP.
SweepReport cmd_sweep(const ExperimentSpec& spec, std::ostream& csv);

/// cmd_sweep over both schemes with paired rows mm-sinr minus mm-sop.
SweepReport cmd_compare(const ExperimentSpec& spec, std::ostream& csv);

/// Library version string, e.g. "0.3.0".
std::string_view library_version();

/// Default directory for command output: $IRSSOP_OUTPUT_DIR or ".".
std::filesystem::path default_output_dir();

}  // namespace irssop
