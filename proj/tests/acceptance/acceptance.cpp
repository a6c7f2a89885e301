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
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// Usage: irssop_acceptance [criterion ...]   (default: all of 1..9)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "irssop/ao.hpp"
#include "irssop/dinkelbach.hpp"
#include "irssop/experiment.hpp"
#include "irssop/lift.hpp"
#include "irssop/receiver.hpp"
#include "irssop/sdp.hpp"
#include "irssop/secrecy.hpp"
#include "oracles.hpp"

namespace irssop {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

SystemConfig make_config(int K, int Nt, int Ns, int Ne, std::uint64_t seed) {
  return SystemConfig::from_snr(K, Nt, Ns, Ne, 1.0, 2.0, seed);
}

ChannelSet draw(const SystemConfig& cfg, std::uint64_t seed) {
  Rng rng(seed, Stream::kChannels);
  return sample_channels(cfg, rng);
}

// Closed-form outage against 1e5 eavesdropper draws on random configs.
Verdict closed_form_outage() {
  Rng pick(1001, Stream::kProbe);
  const int Ks[] = {1, 2, 4};
  const int Nts[] = {2, 4, 10};
  const int Nss[] = {4, 8, 16};
  const int Nes[] = {1, 2, 4};
  double worst = 0.0;
  double slowest = 0.0;
  for (int c = 0; c < 10; ++c) {
    ExperimentSpec spec;
    spec.num_users = Ks[static_cast<int>(pick.next_u64() % 3)];
    spec.bs_antennas = Nts[static_cast<int>(pick.next_u64() % 3)];
    spec.irs_elements = Nss[static_cast<int>(pick.next_u64() % 3)];
    spec.eve_antennas = Nes[static_cast<int>(pick.next_u64() % 3)];
    spec.seed = 500 + c;
    spec.mc_samples = 100000;
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream csv;
    const ValidateReport r = cmd_validate_sop(spec, csv);
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    for (const auto& row : r.rows) worst = std::max(worst, row.gap);
  }
  return {worst <= 0.01 && slowest <= 60.0,
          fmt::format("max |closed form - empirical| = {:.4f} (<= 0.01), slowest config {:.1f} s",
                      worst, slowest)};
}

// Receivers beat 1e4 random unit vectors for every user.
Verdict receiver_optimality() {
  Rng probe(1002, Stream::kProbe);
  int violations = 0;
  double worst_margin = INFINITY;
  for (int inst = 0; inst < 50; ++inst) {
    const int K = 1 + inst % 4;
    const int Nt = 1 + (inst * 7) % 8;
    const SystemConfig cfg = make_config(K, Nt, 4 + inst % 5, 2, 2000 + inst);
    const ChannelSet chs = draw(cfg, 2000 + inst);
    Rng opt(2000 + inst, Stream::kOptimizer);
    const PhaseShift phi = PhaseShift::random(cfg.irs_elements, opt);
    const ReceiveMatrix W = optimize_receivers(chs, phi, cfg);
    for (int k = 0; k < K; ++k) {
      const RatioForm rf = ratio_form(chs, phi, cfg, k);
      const double best = z_value(chs, phi, W, cfg, k);
      for (int s = 0; s < 10000; ++s) {
        const CVector w = oracle::random_unit_vector(Nt, probe);
        const double z = rf.c1 * (w.dot(rf.A * w)).real() / (w.dot(rf.B * w)).real() + rf.c2;
        const double margin = best - z;
        worst_margin = std::min(worst_margin, margin / (1.0 + std::abs(best)));
        if (margin < -1e-12 * (1.0 + std::abs(best))) ++violations;
      }
    }
  }
  return {violations == 0,
          fmt::format("{} random vectors beat the returned receiver; smallest relative margin {:.3g}",
                      violations, worst_margin)};
}

// Lifted quadratic forms at rank one reproduce the direct expressions.
Verdict lift_identity() {
  double gain_err = 0.0;
  double ratio_err = 0.0;
  for (int inst = 0; inst < 100; ++inst) {
    const int K = 1 + inst % 4;
    const SystemConfig cfg = make_config(K, 2 + inst % 7, 2 + inst % 15, 2, 3000 + inst);
    const ChannelSet chs = draw(cfg, 3000 + inst);
    Rng opt(3000 + inst, Stream::kOptimizer);
    const PhaseShift phi = PhaseShift::random(cfg.irs_elements, opt);
    const ReceiveMatrix W = optimize_receivers(chs, phi, cfg);
    const LiftedProblem lp = build_lift(chs, W, cfg);
    const CVector qh = homogenize(phi);
    const CMatrix Q = qh * qh.adjoint();
    for (int k = 0; k < K; ++k) {
      for (int i = 0; i < K; ++i) {
        const double direct = std::norm(W.w(k).dot(effective_channel(chs, phi, i)));
        const double lifted = (lp.M(i, k) * Q).trace().real() + lp.v(i, k);
        gain_err = std::max(gain_err, std::abs(lifted - direct) / std::max(direct, 1e-300));
      }
      const double z = z_value(chs, phi, W, cfg, k);
      const double r = eval_affine_forms(lp, Q, k).ratio();
      ratio_err = std::max(ratio_err, std::abs(r - z) / std::max(1.0, std::abs(z)));
    }
  }
  return {gain_err <= 1e-9 && ratio_err <= 1e-8,
          fmt::format("max relative gain error {:.2e} (<= 1e-9), max ratio error {:.2e} (<= 1e-8)",
                      gain_err, ratio_err)};
}

LiftedProblem all_ones_lift(int n, double c1, double c2) {
  LiftedProblem lp;
  lp.dim = n;
  lp.num_users = 1;
  CMatrix M = CMatrix::Ones(n, n);
  M(n - 1, n - 1) = 0.0;
  lp.blocks = {M};
  lp.v_values = {1.0};
  lp.t = {1.0};
  lp.c1 = {c1};
  lp.c2 = {c2};
  lp.rho = {1.0};
  return lp;
}

// Monotone lambda, F <= tau on channel instances, and the analytic certificate.
Verdict dinkelbach_correctness() {
  int bad_history = 0;
  double worst_F = -INFINITY;
  double slowest = 0.0;
  int instances = 0;
  for (int inst = 0; inst < 12; ++inst) {
    const int K = 1 + inst % 4;
    const int Ns = 4 + 4 * (inst % 4);
    const SystemConfig cfg = make_config(K, 4 + inst % 6, Ns, 2, 4000 + inst);
    const ChannelSet chs = draw(cfg, 4000 + inst);
    Rng opt(4000 + inst, Stream::kOptimizer);
    const PhaseShift phi = PhaseShift::random(Ns, opt);
    const ReceiveMatrix W = optimize_receivers(chs, phi, cfg);
    for (Objective obj : {Objective::kOutage, Objective::kSinr}) {
      const auto t0 = std::chrono::steady_clock::now();
      const DinkelbachResult r = dinkelbach_solve(build_lift(chs, W, cfg, obj));
      slowest = std::max(slowest,
                         std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      ++instances;
      const auto& h = r.state.history;
      for (std::size_t m = 1; m < h.size(); ++m) {
        if (h[m].lambda_in < h[m - 1].lambda_in) ++bad_history;
      }
      worst_F = std::max(worst_F, r.state.F);
    }
  }
  double cert_err = 0.0;
  for (int n : {5, 9, 17}) {
    const double c1 = 0.02;
    const double c2 = -0.3;
    const DinkelbachResult r = dinkelbach_solve(all_ones_lift(n, c1, c2));
    cert_err = std::max(cert_err, std::abs(r.state.lambda - (c1 * n * n + c2)));
  }
  return {bad_history == 0 && worst_F <= 1e-5 && cert_err <= 1e-4 && slowest <= 60.0,
          fmt::format("{} instances, {} lambda decreases, max final F {:.2e} (<= 1e-5), "
                      "certificate error {:.2e} (<= 1e-4), slowest {:.2f} s",
                      instances, bad_history, worst_F, cert_err, slowest)};
}

// solve() against the brute-force oracle on small instances.
Verdict sdp_oracle() {
  Rng rng(1005, Stream::kProbe);
  double worst_gap = 0.0;
  double worst_residual = 0.0;
  int not_optimal = 0;
  for (int inst = 0; inst < 20; ++inst) {
    SdpInstance s;
    s.dim = 4;
    const int K = 1 + inst % 3;
    for (int k = 0; k < K; ++k) {
      s.C.push_back(oracle::random_hermitian(4, rng));
      s.a.push_back(rng.complex_normal().real());
    }
    const SdpSolution sol = solve(s);
    if (sol.status != SdpStatus::kOptimal) ++not_optimal;
    worst_gap = std::max(worst_gap, std::abs(sol.u - oracle::sdp_bruteforce(s, 5000 + inst)));
    for (int m = 0; m < 4; ++m) {
      worst_residual = std::max(worst_residual, std::abs(sol.Q(m, m) - 1.0));
    }
    worst_residual = std::max(worst_residual, std::max(0.0, -herm_eig(sol.Q).eigenvalues(0)));
    for (int k = 0; k < K; ++k) {
      const double slack = s.a[k] + (s.C[k] * sol.Q).trace().real() - sol.u;
      worst_residual = std::max(worst_residual, std::max(0.0, -slack));
    }
  }
  return {worst_gap <= 1e-3 && worst_residual <= 1e-6 && not_optimal == 0,
          fmt::format("max objective gap {:.2e} (<= 1e-3), max constraint residual {:.2e} (<= 1e-6)",
                      worst_gap, worst_residual)};
}

// The default scenario: K = 4, Nt = 10, Ne = 2, Ns = 32, SNR 1 dB, R = 2.
struct ScenarioRuns {
  std::vector<AOTrace> sop;
  std::vector<double> sop_final;
  std::vector<double> sinr_final;
};

const ScenarioRuns& scenario_runs() {
  static const ScenarioRuns runs = [] {
    ScenarioRuns out;
    ExperimentSpec spec;
    const SystemConfig cfg = spec.system();
    for (int t = 0; t < 20; ++t) {
      const std::uint64_t seed = trial_seed(spec.seed, t);
      const ChannelSet chs = draw(cfg, seed);
      for (Scheme scheme : {Scheme::kMmSop, Scheme::kMmSinr}) {
        Rng opt(seed, Stream::kOptimizer);
        const AOResult r = run_scheme(scheme, chs, cfg, spec.ao, opt);
        const double final_sop = max_outage(evaluate_users(chs, r.phi, r.W, cfg));
        if (scheme == Scheme::kMmSop) {
          out.sop.push_back(r.trace);
          out.sop_final.push_back(final_sop);
        } else {
          out.sinr_final.push_back(final_sop);
        }
      }
    }
    return out;
  }();
  return runs;
}

// P_out at an iteration, holding the last value once the loop has stopped.
double pout_at(const AOTrace& trace, int iteration) {
  const auto& recs = trace.records;
  const std::size_t i = std::min<std::size_t>(iteration, recs.size()) - 1;
  return recs[i].max_sop;
}

Verdict ao_convergence() {
  const ScenarioRuns& runs = scenario_runs();
  const double n = static_cast<double>(runs.sop.size());
  double it1 = 0.0;
  double it10 = 0.0;
  double initial = 0.0;
  double final_sop = 0.0;
  for (std::size_t t = 0; t < runs.sop.size(); ++t) {
    it1 += pout_at(runs.sop[t], 1) / n;
    it10 += pout_at(runs.sop[t], 10) / n;
    initial += runs.sop[t].initial_max_sop / n;
    final_sop += runs.sop_final[t] / n;
  }
  return {it10 <= it1 && final_sop <= initial - 0.05,
          fmt::format("mean P_out: initial {:.4f}, iteration 1 {:.4f}, iteration 10 {:.4f}, "
                      "final incumbent {:.4f}",
                      initial, it1, it10, final_sop)};
}

Verdict scheme_comparison() {
  const ScenarioRuns& runs = scenario_runs();
  double mean_sop = 0.0;
  double mean_sinr = 0.0;
  int nonnegative = 0;
  const double n = static_cast<double>(runs.sop_final.size());
  for (std::size_t t = 0; t < runs.sop_final.size(); ++t) {
    mean_sop += runs.sop_final[t] / n;
    mean_sinr += runs.sinr_final[t] / n;
    if (runs.sinr_final[t] - runs.sop_final[t] >= 0.0) ++nonnegative;
  }
  return {mean_sop <= mean_sinr && nonnegative >= 16,
          fmt::format("mean max-SOP mm-sop {:.4f} vs mm-sinr {:.4f}; paired difference >= 0 in "
                      "{}/20 seeds (>= 16)",
                      mean_sop, mean_sinr, nonnegative)};
}

// Mean max-SOP along one sweep axis. direction +1: non-decreasing expected.
Verdict sweep_trend(SweepAxis axis, std::vector<int> values, int direction, int ns) {
  ExperimentSpec spec;
  spec.irs_elements = ns;
  spec.axis = axis;
  spec.values = values;
  spec.trials = 20;
  spec.jobs = 0;
  std::ostringstream csv;
  const SweepReport r = cmd_sweep(spec, csv);
  std::vector<double> means;
  for (int v : values) means.push_back(r.find("mm-sop", v)->mean);
  int violations = 0;
  bool large = false;
  for (std::size_t i = 1; i < means.size(); ++i) {
    const double step = direction * (means[i] - means[i - 1]);
    if (step < 0.0) {
      ++violations;
      if (-step > 0.005) large = true;
    }
  }
  std::string text = fmt::format("{}:", to_string(axis));
  for (std::size_t i = 0; i < values.size(); ++i) {
    text += fmt::format(" {}={:.4f}", values[i], means[i]);
  }
  return {violations <= 1 && !large, text + fmt::format(" ({} violations)", violations)};
}

Verdict sweep_trends() {
  const Verdict ne = sweep_trend(SweepAxis::kNe, {1, 2, 4, 6}, +1, 16);
  const Verdict ns = sweep_trend(SweepAxis::kNs, {8, 16, 32}, -1, 32);
  const Verdict nt = sweep_trend(SweepAxis::kNt, {4, 8, 12}, -1, 16);
  return {ne.pass && ns.pass && nt.pass,
          fmt::format("{}; {}; {}", ne.detail, ns.detail, nt.detail)};
}

Verdict determinism() {
  ExperimentSpec spec;
  spec.num_users = 3;
  spec.bs_antennas = 4;
  spec.irs_elements = 8;
  spec.trials = 3;
  spec.mc_samples = 20000;
  spec.axis = SweepAxis::kNe;
  spec.values = {1, 2};
  spec.schemes = {Scheme::kMmSop, Scheme::kMmSinr};
  using Command = std::function<void(const ExperimentSpec&, std::ostream&)>;
  const std::vector<std::pair<const char*, Command>> commands = {
      {"validate-sop", [](const ExperimentSpec& s, std::ostream& o) { cmd_validate_sop(s, o); }},
      {"optimize", [](const ExperimentSpec& s, std::ostream& o) { cmd_optimize(s, o); }},
      {"sweep", [](const ExperimentSpec& s, std::ostream& o) { cmd_sweep(s, o); }},
      {"compare", [](const ExperimentSpec& s, std::ostream& o) { cmd_compare(s, o); }},
  };
  std::vector<std::string> differing;
  for (const auto& [name, run] : commands) {
    std::ostringstream a;
    std::ostringstream b;
    ExperimentSpec threaded = spec;
    threaded.jobs = 3;
    run(spec, a);
    run(threaded, b);
    if (a.str() != b.str() || a.str().empty()) differing.emplace_back(name);
  }
  std::string names;
  for (const auto& d : differing) names += " " + d;
  return {differing.empty(),
          differing.empty() ? "validate-sop, optimize, sweep and compare reproduce byte-identical CSV"
                            : "differing output:" + names};
}

struct Criterion {
  int id;
  const char* name;
  Verdict (*run)();
};

const Criterion kCriteria[] = {
    {1, "closed-form outage vs Monte Carlo", closed_form_outage},
    {2, "receiver optimality", receiver_optimality},
    {3, "lift identity", lift_identity},
    {4, "Dinkelbach correctness", dinkelbach_correctness},
    {5, "SDP oracle equivalence", sdp_oracle},
    {6, "AO convergence shape", ao_convergence},
    {7, "scheme comparison", scheme_comparison},
    {8, "sweep trends", sweep_trends},
    {9, "determinism", determinism},
};

}  // namespace
}  // namespace irssop

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : irssop::kCriteria) {
    if (!selected.empty() && selected.count(c.id) == 0) continue;
    const auto t0 = std::chrono::steady_clock::now();
    irssop::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::printf("%s %d %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
