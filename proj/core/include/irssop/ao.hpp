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

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "irssop/channel.hpp"
#include "irssop/dinkelbach.hpp"
#include "irssop/lift.hpp"
#include "irssop/rng.hpp"

namespace irssop {

enum class Scheme { kMmSop, kMmSinr };

std::string_view to_string(Scheme scheme);
/// Accepts "mm-sop" / "mm-sinr" (case-insensitive). Throws kParse.
Scheme parse_scheme(std::string_view text);

struct AOConfig {
  double xi = 1e-4;
  int iter_max = 20;
  double tau = 1e-5;
  int max_outer = 50;
  int randomization_samples = 1000;
  /// Inner solves run tighter than the solver default so F <= tau is meaningful.
  SdpOptions sdp = inner_sdp_options();

  void validate() const;
};

struct AORecord {
  int iteration = 0;  // 1-based
  double max_sop = 1.0;  // P_out(iter)
  double min_sop = 1.0;
  std::vector<double> sinr;
  std::vector<double> z;
  std::vector<double> sop;
  std::vector<DinkelbachStep> dinkelbach;
  bool dinkelbach_converged = true;
  double sdr_bound = 0.0;            // min_k N_k/D_k at the relaxed optimum
  double recovered_objective = 0.0;  // same objective at the recovered phases
  bool rank_one = false;
  double incumbent_max_sop = 1.0;
  double duration_ms = 0.0;
};

struct AOTrace {
  Scheme scheme = Scheme::kMmSop;
  double initial_max_sop = 1.0;  // random phases, optimal receivers
  double initial_min_sop = 1.0;
  std::vector<AORecord> records;
  bool converged = false;
  int best_iteration = 0;  // 0 means the initial point was never beaten
};

struct AOResult {
  PhaseShift phi;
  ReceiveMatrix W;
  AOTrace trace;
};

/// Receives every record as soon as its iteration completes.
using TraceSink = std::function<void(const AORecord&)>;

/// Alternating optimization minimizing the maximum outage probability.
///
/// The phase vector starts uniform on [0, 2*pi) from `rng`. Each iteration
/// optimizes the receivers at the current phases, then the phases at those
/// receivers (Dinkelbach over the relaxation plus Gaussian randomization),
/// and records P_out = max_k SOP_k at the new pair. The loop stops once
/// |P_out(iter) - P_out(iter - 1)| <= xi (checked from the second iteration)
/// or at iter_max. The returned pair is the incumbent with the lowest P_out.
AOResult run_ao(const ChannelSet& chs, const SystemConfig& cfg, const AOConfig& ao_cfg,
                Rng& rng, const TraceSink& sink = {});

/// Same loop with the phase step maximizing min_k SINR_k. The incumbent is
/// chosen by min SINR; outage metrics are computed post hoc.
AOResult run_baseline_mmsinr(const ChannelSet& chs, const SystemConfig& cfg,
                             const AOConfig& ao_cfg, Rng& rng,
                             const TraceSink& sink = {});

AOResult run_scheme(Scheme scheme, const ChannelSet& chs, const SystemConfig& cfg,
                    const AOConfig& ao_cfg, Rng& rng, const TraceSink& sink = {});

}  // namespace irssop
