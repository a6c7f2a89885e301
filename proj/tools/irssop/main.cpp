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

// irssop: outage validation, single AO runs and ensemble sweeps.
//
// Every subcommand writes one CSV plus "<csv>.meta" holding the resolved
// configuration. Failures print "error: <category>: <message>" on stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "irssop/errors.hpp"
#include "irssop/experiment.hpp"

namespace {

using irssop::Error;
using irssop::ErrorCode;
using irssop::ExperimentSpec;

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;

// Flag name, config key, help text.
struct Setting {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr Setting kSettings[] = {
    {"--users", "users", "number of users K"},
    {"--nt", "nt", "base station antennas"},
    {"--ns", "ns", "IRS elements"},
    {"--ne", "ne", "eavesdropper antennas"},
    {"--snr-db", "snr_db", "per-user SNR in dB (noise variances are 1)"},
    {"--rate", "rate", "secrecy coding rate, bit/s/Hz"},
    {"--seed", "seed", "base seed; trial t uses a seed derived from (seed, t)"},
    {"--sweep", "sweep", "sweep axis: none, ns, nt, ne"},
    {"--values", "values", "comma-separated sweep values"},
    {"--trials", "trials", "channel draws per sweep value"},
    {"--schemes", "schemes", "comma-separated: mm-sop, mm-sinr"},
    {"--xi", "xi", "AO stop threshold on |delta P_out|"},
    {"--iter-max", "iter_max", "AO iteration cap"},
    {"--tau", "tau", "Dinkelbach tolerance"},
    {"--max-outer", "max_outer", "Dinkelbach iteration cap"},
    {"--randomization", "randomization", "Gaussian randomization samples"},
    {"--sdp-method", "sdp_method", "ipm or admm"},
    {"--sdp-tol", "sdp_tol", "inner SDP tolerance"},
    {"--mc-samples", "mc_samples", "eavesdropper draws for validate-sop"},
    {"--jobs", "jobs", "worker threads, 0 = all hardware threads"},
};

struct Invocation {
  std::string config;
  std::vector<std::string> sets;
  std::map<std::string, std::string> flags;
  bool timing = false;
  std::string output;
};

void add_common(CLI::App& cmd, Invocation& inv) {
  cmd.add_option("-c,--config", inv.config, "key = value configuration file");
  cmd.add_option("--set", inv.sets, "extra key=value override (repeatable)");
  for (const auto& s : kSettings) cmd.add_option(s.flag, inv.flags[s.key], s.help);
  cmd.add_flag("--timing", inv.timing, "add a wall-clock column (output no longer reproducible)");
  cmd.add_option("-o,--output", inv.output,
                 "CSV path, '-' for stdout (default: $IRSSOP_OUTPUT_DIR/<command>.csv)");
}

ExperimentSpec resolve(const CLI::App& cmd, const Invocation& inv) {
  ExperimentSpec spec;
  if (!inv.config.empty()) irssop::apply_config_file(spec, inv.config);
  for (const auto& s : kSettings) {
    if (cmd.count(s.flag) > 0) irssop::apply_setting(spec, s.key, inv.flags.at(s.key));
  }
  for (const auto& kv : inv.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParse, fmt::format("--set expects key=value, got '{}'", kv));
    }
    irssop::apply_setting(spec, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (inv.timing) spec.timing = true;
  spec.validate();
  return spec;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
}

// Runs `body` against a string buffer and writes the CSV and its .meta.
void emit(const std::string& command, const Invocation& inv, const ExperimentSpec& spec,
          const std::function<void(std::ostream&)>& body) {
  std::ostringstream csv;
  body(csv);
  if (inv.output == "-") {
    std::cout << csv.str();
    return;
  }
  const std::filesystem::path path =
      inv.output.empty() ? irssop::default_output_dir() / (command + ".csv")
                         : std::filesystem::path(inv.output);
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error(ErrorCode::kIo, fmt::format("cannot create '{}': {}",
                                              path.parent_path().string(), ec.message()));
    }
  }
  write_text(path, csv.str());
  std::string meta = fmt::format("# irssop {}\n# command: {}\n", irssop::library_version(),
                                 command);
  meta += "# trials counts independent channel draws per sweep value (default 20)\n";
  meta += irssop::describe(spec);
  write_text(path.string() + ".meta", meta);
  std::cerr << "wrote " << path.string() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Secrecy outage optimization for IRS-assisted multi-user uplinks"};
  app.set_version_flag("--version", std::string(irssop::library_version()));
  app.require_subcommand(1);

  Invocation inv;
  auto* validate = app.add_subcommand("validate-sop", "closed-form outage vs Monte Carlo");
  auto* optimize = app.add_subcommand("optimize", "one AO run per scheme, per-iteration rows");
  auto* sweep = app.add_subcommand("sweep", "trials over a sweep axis with aggregates");
  auto* compare = app.add_subcommand("compare", "sweep over both schemes with paired differences");
  for (auto* cmd : {validate, optimize, sweep, compare}) add_common(*cmd, inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const ExperimentSpec spec = resolve(*cmd, inv);
  const std::string name = cmd->get_name();

  if (cmd == validate) {
    irssop::ValidateReport report;
    emit(name, inv, spec, [&](std::ostream& csv) { report = irssop::cmd_validate_sop(spec, csv); });
    for (const auto& row : report.rows) {
      std::cerr << fmt::format("user {}: closed form {:.5f}, empirical {:.5f}, gap {:.5f} <= {:.5f}: {}\n",
                               row.user, row.closed_form, row.empirical, row.gap, row.threshold,
                               row.pass ? "pass" : "FAIL");
    }
    if (!report.pass) {
      std::cerr << "error: validation: closed form and Monte Carlo disagree\n";
      return kExitFailure;
    }
    return 0;
  }
  if (cmd == optimize) {
    emit(name, inv, spec, [&](std::ostream& csv) {
      const auto report = irssop::cmd_optimize(spec, csv);
      for (const auto& r : report.results) {
        const double final_sop = r.trace.records.empty()
                                     ? r.trace.initial_max_sop
                                     : r.trace.records.back().incumbent_max_sop;
        std::cerr << fmt::format("{}: P_out {:.5f} -> {:.5f} in {} iterations{}\n",
                                 irssop::to_string(r.trace.scheme), r.trace.initial_max_sop,
                                 final_sop, r.trace.records.size(),
                                 r.trace.converged ? "" : " (iteration cap)");
      }
    });
    return 0;
  }

  irssop::SweepReport report;
  emit(name, inv, spec, [&](std::ostream& csv) {
    report = cmd == sweep ? irssop::cmd_sweep(spec, csv) : irssop::cmd_compare(spec, csv);
  });
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  int failed = 0;
  for (const auto& t : report.trials) failed += t.ok ? 0 : 1;
  for (const auto& agg : report.aggregates) {
    const std::string where = agg.value ? fmt::format(" {}={}", irssop::to_string(spec.axis), *agg.value) : "";
    std::cerr << fmt::format("{}{}: mean {:.5f}, std {:.5f}, n {}\n", agg.scheme, where,
                             agg.mean, agg.stddev, agg.count);
  }
  if (failed > 0) {
    std::cerr << fmt::format("error: trial_failed: {} of {} trials failed\n", failed,
                             report.trials.size());
    return kExitFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const irssop::Error& e) {
    std::cerr << "error: " << irssop::error_code_name(e.code()) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitError;
  }
}
