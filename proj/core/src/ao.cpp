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
#include "irssop/ao.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "irssop/errors.hpp"
#include "irssop/receiver.hpp"
#include "irssop/secrecy.hpp"

namespace irssop {
namespace {

struct Score {
  double max_sop = 1.0;
  double min_z = 0.0;
  double min_sinr = 0.0;
};

Score score_of(const std::vector<UserMetrics>& users) {
  return {max_outage(users), min_z(users), min_sinr(users)};
}

// Strict improvement under the scheme's own objective.
bool improves(Scheme scheme, const Score& candidate, const Score& incumbent) {
  if (scheme == Scheme::kMmSinr) return candidate.min_sinr > incumbent.min_sinr;
  if (candidate.max_sop != incumbent.max_sop) return candidate.max_sop < incumbent.max_sop;
  return candidate.min_z > incumbent.min_z;
}

AOResult run_loop(Scheme scheme, const ChannelSet& chs, const SystemConfig& cfg,
                  const AOConfig& ao_cfg, Rng& rng, const TraceSink& sink) {
  cfg.validate();
  chs.check_against(cfg);
  ao_cfg.validate();
  const Objective objective = scheme == Scheme::kMmSop ? Objective::kOutage : Objective::kSinr;

  DinkelbachOptions dink;
  dink.tau = ao_cfg.tau;
  dink.max_outer = ao_cfg.max_outer;
  dink.sdp = ao_cfg.sdp;

  AOResult best;
  best.trace.scheme = scheme;
  PhaseShift phi = PhaseShift::random(cfg.irs_elements, rng);
  ReceiveMatrix W = optimize_receivers(chs, phi, cfg);
  const auto initial = evaluate_users(chs, phi, W, cfg);
  best.trace.initial_max_sop = max_outage(initial);
  best.trace.initial_min_sop = min_outage(initial);
  best.phi = phi;
  best.W = W;
  Score incumbent = score_of(initial);

  std::optional<SdpWarmStart> warm;
  double previous = 0.0;
  for (int iter = 1; iter <= ao_cfg.iter_max; ++iter) {
    const auto start = std::chrono::steady_clock::now();
    if (iter > 1) W = optimize_receivers(chs, phi, cfg);
    const LiftedProblem lp = build_lift(chs, W, cfg, objective);

    AORecord record;
    record.iteration = iter;
    DinkelbachResult relaxed;
    try {
      relaxed = dinkelbach_solve(lp, dink, warm);
    } catch (const MaxOuterIterationsError& e) {
      relaxed = e.best();
      record.dinkelbach_converged = false;
    }
    warm = relaxed.solver_state;
    const PhaseRecovery recovered =
        recover_phase(relaxed.Q, lp, chs, W, cfg, rng, ao_cfg.randomization_samples);
    phi = recovered.phi;

    const auto users = evaluate_users(chs, phi, W, cfg);
    record.max_sop = max_outage(users);
    record.min_sop = min_outage(users);
    for (const auto& u : users) {
      record.sinr.push_back(u.sinr);
      record.z.push_back(u.z);
      record.sop.push_back(u.sop);
    }
    record.dinkelbach = relaxed.state.history;
    record.sdr_bound = relaxed.state.lambda;
    record.recovered_objective = recovered.objective;
    record.rank_one = recovered.rank_one;

    const Score score = score_of(users);
    if (improves(scheme, score, incumbent)) {
      incumbent = score;
      best.phi = phi;
      best.W = W;
      best.trace.best_iteration = iter;
    }
    record.incumbent_max_sop = incumbent.max_sop;
    record.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (sink) sink(record);
    best.trace.records.push_back(std::move(record));

    const double p_out = best.trace.records.back().max_sop;
    if (iter >= 2 && std::abs(p_out - previous) <= ao_cfg.xi) {
      best.trace.converged = true;
      break;
    }
    previous = p_out;
  }
  return best;
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::kMmSop ? "mm-sop" : "mm-sinr";
}

Scheme parse_scheme(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "mm-sop") return Scheme::kMmSop;
  if (lower == "mm-sinr") return Scheme::kMmSinr;
  throw Error(ErrorCode::kParse, fmt::format("unknown scheme '{}'", text));
}

void AOConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidConfig, msg); };
  if (!(xi > 0.0)) fail(fmt::format("xi must be > 0, got {}", xi));
  if (iter_max < 1) fail(fmt::format("iter_max must be >= 1, got {}", iter_max));
  if (!(tau > 0.0)) fail(fmt::format("tau must be > 0, got {}", tau));
  if (max_outer < 1) fail(fmt::format("max_outer must be >= 1, got {}", max_outer));
  if (randomization_samples < 0) {
    fail(fmt::format("randomization samples must be >= 0, got {}", randomization_samples));
  }
}

AOResult run_ao(const ChannelSet& chs, const SystemConfig& cfg, const AOConfig& ao_cfg, Rng& rng,
                const TraceSink& sink) {
  return run_loop(Scheme::kMmSop, chs, cfg, ao_cfg, rng, sink);
}

AOResult run_baseline_mmsinr(const ChannelSet& chs, const SystemConfig& cfg,
                             const AOConfig& ao_cfg, Rng& rng, const TraceSink& sink) {
  return run_loop(Scheme::kMmSinr, chs, cfg, ao_cfg, rng, sink);
}

AOResult run_scheme(Scheme scheme, const ChannelSet& chs, const SystemConfig& cfg,
                    const AOConfig& ao_cfg, Rng& rng, const TraceSink& sink) {
  return run_loop(scheme, chs, cfg, ao_cfg, rng, sink);
}

}  // namespace irssop
