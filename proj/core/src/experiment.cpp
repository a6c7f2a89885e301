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

#include "irssop/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "irssop/errors.hpp"
#include "irssop/receiver.hpp"
#include "irssop/rng.hpp"
#include "irssop/secrecy.hpp"

namespace irssop {
namespace {

constexpr int kDeskScaleDim = 65;

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::kParse, fmt::format("bad value '{}' for key '{}'", value, key));
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) bad_value(key, value);
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  // from_chars for double is missing on some toolchains still in use.
  const std::string copy(value);
  char* end = nullptr;
  const double out = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(out)) {
    bad_value(key, value);
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  const std::string v = lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, value);
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string value_text(std::optional<int> value) {
  return value ? std::to_string(*value) : std::string();
}

std::string failure_text(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return fmt::format("{}: {}", error_code_name(err->code()), err->what());
  }
  return fmt::format("internal: {}", e.what());
}

// Runs fn(0..count-1) on up to `jobs` threads. Every index writes only its
// own slot, so results do not depend on scheduling.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double stddev_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

SweepReport run_sweep(const ExperimentSpec& spec, const std::vector<Scheme>& schemes,
                      bool paired, std::ostream& csv) {
  spec.validate();
  SweepReport report;
  const auto points = spec.points();
  for (const auto& p : points) {
    const SystemConfig cfg = spec.system(p);
    if (cfg.irs_elements + 1 > kDeskScaleDim) {
      report.warnings.push_back(fmt::format(
          "ns = {} gives lifted dimension {} > {}; solver budgets are tuned for smaller sizes",
          cfg.irs_elements, cfg.irs_elements + 1, kDeskScaleDim));
    }
  }

  const int S = static_cast<int>(schemes.size());
  const int cells = static_cast<int>(points.size()) * spec.trials * S;
  report.trials.resize(cells);
  parallel_for(cells, spec.jobs, [&](int index) {
    const int s = index % S;
    const int t = (index / S) % spec.trials;
    const int p = index / (S * spec.trials);
    report.trials[index] = run_trial(spec, points[p], t, schemes[s]);
  });

  std::vector<std::string> header = {"row_type", "scheme", "axis", "value", "trial", "seed",
                                     "status", "iterations", "converged", "initial_max_sop",
                                     "max_sop", "min_sop"};
  for (int k = 1; k <= spec.num_users; ++k) header.push_back(fmt::format("sinr_{}", k));
  header.insert(header.end(), {"sdr_bound", "std_max_sop", "count"});
  if (paired) header.insert(header.end(), {"paired_diff", "nonnegative"});
  header.push_back("error");
  if (spec.timing) header.push_back("wall_ms");
  const std::size_t width = header.size();
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < width; ++i) {
      if (i) csv << ',';
      csv << csv_field(i < fields.size() ? fields[i] : std::string());
    }
    csv << "\r\n";
  };
  emit(header);

  const std::string axis(to_string(spec.axis));
  const std::size_t sinr_at = 12;
  const std::size_t tail_at = sinr_at + spec.num_users;
  auto blank = [&] { return std::vector<std::string>(width); };
  auto error_at = [&] { return width - 1 - (spec.timing ? 1 : 0); };

  for (const auto& r : report.trials) {
    auto row = blank();
    row[0] = "trial";
    row[1] = std::string(to_string(r.scheme));
    row[2] = axis;
    row[3] = value_text(r.value);
    row[4] = std::to_string(r.trial);
    row[5] = std::to_string(r.seed);
    row[6] = r.ok ? "ok" : "failed";
    if (r.ok) {
      row[7] = std::to_string(r.iterations);
      row[8] = r.converged ? "true" : "false";
      row[9] = csv_number(r.initial_max_sop);
      row[10] = csv_number(r.max_sop);
      row[11] = csv_number(r.min_sop);
      for (std::size_t k = 0; k < r.sinr.size(); ++k) row[sinr_at + k] = csv_number(r.sinr[k]);
      row[tail_at] = csv_number(r.sdr_bound);
    }
    row[error_at()] = r.error;
    if (spec.timing) row[width - 1] = csv_number(r.wall_ms);
    emit(row);
  }

  // Paired differences: MM-SINR minus MM-SOP on the same channel draw.
  int sop_index = -1;
  int sinr_index = -1;
  for (int s = 0; s < S; ++s) {
    if (schemes[s] == Scheme::kMmSop) sop_index = s;
    if (schemes[s] == Scheme::kMmSinr) sinr_index = s;
  }
  std::vector<std::vector<double>> diffs(points.size());
  if (paired && sop_index >= 0 && sinr_index >= 0) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      for (int t = 0; t < spec.trials; ++t) {
        const std::size_t base = (p * spec.trials + t) * S;
        const auto& a = report.trials[base + sop_index];
        const auto& b = report.trials[base + sinr_index];
        auto row = blank();
        row[0] = "paired";
        row[1] = "paired";
        row[2] = axis;
        row[3] = value_text(points[p]);
        row[4] = std::to_string(t);
        row[5] = std::to_string(a.seed);
        row[6] = a.ok && b.ok ? "ok" : "failed";
        if (a.ok && b.ok) {
          const double d = b.max_sop - a.max_sop;
          diffs[p].push_back(d);
          row[tail_at + 3] = csv_number(d);
        }
        emit(row);
      }
    }
  }

  for (std::size_t p = 0; p < points.size(); ++p) {
    for (int s = 0; s < S; ++s) {
      std::vector<double> xs;
      for (int t = 0; t < spec.trials; ++t) {
        const auto& r = report.trials[(p * spec.trials + t) * S + s];
        if (r.ok) xs.push_back(r.max_sop);
      }
      Aggregate agg{std::string(to_string(schemes[s])), points[p],
                    static_cast<int>(xs.size()), mean_of(xs), stddev_of(xs), 0};
      report.aggregates.push_back(agg);
    }
    if (paired && sop_index >= 0 && sinr_index >= 0) {
      const auto& xs = diffs[p];
      Aggregate agg{"paired", points[p], static_cast<int>(xs.size()), mean_of(xs),
                    stddev_of(xs),
                    static_cast<int>(std::count_if(xs.begin(), xs.end(),
                                                   [](double d) { return d >= 0.0; }))};
      report.aggregates.push_back(agg);
    }
  }
  for (const auto& agg : report.aggregates) {
    auto row = blank();
    row[0] = "aggregate";
    row[1] = agg.scheme;
    row[2] = axis;
    row[3] = value_text(agg.value);
    row[6] = agg.count > 0 ? "ok" : "failed";
    if (agg.scheme == "paired") {
      row[tail_at + 3] = csv_number(agg.mean);
      row[tail_at + 4] = std::to_string(agg.nonnegative);
    } else {
      row[10] = csv_number(agg.mean);
    }
    row[tail_at + 1] = csv_number(agg.stddev);
    row[tail_at + 2] = std::to_string(agg.count);
    emit(row);
  }
  csv.flush();
  return report;
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kNone: return "none";
    case SweepAxis::kNs: return "ns";
    case SweepAxis::kNt: return "nt";
    case SweepAxis::kNe: return "ne";
  }
  return "none";
}

SweepAxis parse_sweep_axis(std::string_view text) {
  const std::string v = lower(trim(text));
  if (v == "none") return SweepAxis::kNone;
  if (v == "ns") return SweepAxis::kNs;
  if (v == "nt") return SweepAxis::kNt;
  if (v == "ne") return SweepAxis::kNe;
  throw Error(ErrorCode::kParse, fmt::format("unknown sweep axis '{}'", text));
}

SystemConfig ExperimentSpec::system(std::optional<int> value) const {
  SystemConfig cfg = SystemConfig::from_snr(num_users, bs_antennas, irs_elements, eve_antennas,
                                            snr_db, rate, seed);
  if (value) {
    switch (axis) {
      case SweepAxis::kNs: cfg.irs_elements = *value; break;
      case SweepAxis::kNt: cfg.bs_antennas = *value; break;
      case SweepAxis::kNe: cfg.eve_antennas = *value; break;
      case SweepAxis::kNone: break;
    }
  }
  return cfg;
}

std::vector<std::optional<int>> ExperimentSpec::points() const {
  if (axis == SweepAxis::kNone) return {std::nullopt};
  return {values.begin(), values.end()};
}

void ExperimentSpec::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidConfig, msg); };
  if (trials < 1) fail(fmt::format("trials must be >= 1 (got {})", trials));
  if (schemes.empty()) fail("at least one scheme is required");
  if (mc_samples < 1) fail(fmt::format("mc_samples must be >= 1 (got {})", mc_samples));
  if (jobs < 0) fail(fmt::format("jobs must be >= 0 (got {})", jobs));
  if (axis != SweepAxis::kNone) {
    if (values.empty()) fail(fmt::format("sweep over {} needs values", to_string(axis)));
    for (int v : values) {
      if (v < 1) fail(fmt::format("sweep values must be positive (got {})", v));
    }
  }
  for (const auto& p : points()) system(p).validate();
  ao.validate();
}

void apply_setting(ExperimentSpec& spec, std::string_view key_in, std::string_view value_in) {
  const std::string key = lower(trim(key_in));
  const std::string_view value = trim(value_in);
  if (key == "users") {
    spec.num_users = parse_number<int>(key, value);
  } else if (key == "nt") {
    spec.bs_antennas = parse_number<int>(key, value);
  } else if (key == "ns") {
    spec.irs_elements = parse_number<int>(key, value);
  } else if (key == "ne") {
    spec.eve_antennas = parse_number<int>(key, value);
  } else if (key == "snr_db") {
    spec.snr_db = parse_real(key, value);
  } else if (key == "rate") {
    spec.rate = parse_real(key, value);
  } else if (key == "seed") {
    spec.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "sweep") {
    spec.axis = parse_sweep_axis(value);
  } else if (key == "values") {
    spec.values.clear();
    if (!value.empty()) {
      for (auto item : split(value, ',')) spec.values.push_back(parse_number<int>(key, item));
    }
  } else if (key == "trials") {
    spec.trials = parse_number<int>(key, value);
  } else if (key == "schemes") {
    spec.schemes.clear();
    for (auto item : split(value, ',')) spec.schemes.push_back(parse_scheme(item));
  } else if (key == "xi") {
    spec.ao.xi = parse_real(key, value);
  } else if (key == "iter_max") {
    spec.ao.iter_max = parse_number<int>(key, value);
  } else if (key == "tau") {
    spec.ao.tau = parse_real(key, value);
  } else if (key == "max_outer") {
    spec.ao.max_outer = parse_number<int>(key, value);
  } else if (key == "randomization") {
    spec.ao.randomization_samples = parse_number<int>(key, value);
  } else if (key == "sdp_method") {
    const std::string v = lower(value);
    if (v == "ipm") {
      spec.ao.sdp.method = SdpMethod::kInteriorPoint;
    } else if (v == "admm") {
      spec.ao.sdp.method = SdpMethod::kOperatorSplitting;
    } else {
      bad_value(key, value);
    }
  } else if (key == "sdp_tol") {
    spec.ao.sdp.tol = parse_real(key, value);
  } else if (key == "mc_samples") {
    spec.mc_samples = parse_number<int>(key, value);
  } else if (key == "jobs") {
    spec.jobs = parse_number<int>(key, value);
  } else if (key == "timing") {
    spec.timing = parse_bool(key, value);
  } else {
    throw Error(ErrorCode::kParse, fmt::format("unknown key '{}'", key_in));
  }
}

void apply_config_text(ExperimentSpec& spec, std::string_view text, std::string_view origin) {
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  fmt::format("{}:{}: expected 'key = value', got '{}'", origin, line_no, line));
    }
    try {
      apply_setting(spec, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("{}:{}: {}", origin, line_no, e.what()));
    }
  }
}

void apply_config_file(ExperimentSpec& spec, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot read config '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(spec, text.str(), path.string());
}

std::string describe(const ExperimentSpec& spec) {
  std::string schemes;
  for (std::size_t i = 0; i < spec.schemes.size(); ++i) {
    if (i) schemes += ",";
    schemes += to_string(spec.schemes[i]);
  }
  std::string out;
  auto put = [&](std::string_view key, const std::string& value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  put("users", std::to_string(spec.num_users));
  put("nt", std::to_string(spec.bs_antennas));
  put("ns", std::to_string(spec.irs_elements));
  put("ne", std::to_string(spec.eve_antennas));
  put("snr_db", fmt::format("{:.17g}", spec.snr_db));
  put("rate", fmt::format("{:.17g}", spec.rate));
  put("seed", std::to_string(spec.seed));
  put("sweep", std::string(to_string(spec.axis)));
  put("values", join_ints(spec.values));
  put("trials", std::to_string(spec.trials));
  put("schemes", schemes);
  put("xi", fmt::format("{:.17g}", spec.ao.xi));
  put("iter_max", std::to_string(spec.ao.iter_max));
  put("tau", fmt::format("{:.17g}", spec.ao.tau));
  put("max_outer", std::to_string(spec.ao.max_outer));
  put("randomization", std::to_string(spec.ao.randomization_samples));
  put("sdp_method", spec.ao.sdp.method == SdpMethod::kInteriorPoint ? "ipm" : "admm");
  put("sdp_tol", fmt::format("{:.17g}", spec.ao.sdp.tol));
  put("mc_samples", std::to_string(spec.mc_samples));
  put("jobs", std::to_string(spec.jobs));
  put("timing", spec.timing ? "true" : "false");
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_number(double value) { return fmt::format("{:.10g}", value); }

ValidateReport cmd_validate_sop(const ExperimentSpec& spec, std::ostream& csv) {
  spec.validate();
  const SystemConfig cfg = spec.system();
  const std::uint64_t seed = trial_seed(spec.seed, 0);
  Rng channel_rng(seed, Stream::kChannels);
  Rng optimizer_rng(seed, Stream::kOptimizer);
  Rng eve_rng(seed, Stream::kEavesdropper);

  const ChannelSet chs = sample_channels(cfg, channel_rng);
  const PhaseShift phi = PhaseShift::random(cfg.irs_elements, optimizer_rng);
  const ReceiveMatrix W = optimize_receivers(chs, phi, cfg);
  const auto users = evaluate_users(chs, phi, W, cfg);
  const int K = cfg.num_users;

  const CMatrix reflected = phi.diagonal().asDiagonal() * chs.F;  // Phi f_k as columns
  std::vector<long long> outages(K, 0);
  for (int s = 0; s < spec.mc_samples; ++s) {
    const EveChannelSample eve = sample_eve_channels(cfg, eve_rng);
    const CMatrix wiretap = eve.h_e + eve.G_e * reflected;
    for (int k = 0; k < K; ++k) {
      const double cw = std::log2(1.0 + cfg.rho[k] / cfg.sigma2_e * wiretap.col(k).squaredNorm());
      const double secrecy = std::max(users[k].capacity - cw, 0.0);
      if (secrecy < cfg.rate[k]) ++outages[k];
    }
  }

  ValidateReport report;
  csv << "user,sinr,capacity,z,closed_form,empirical,gap,threshold,pass\r\n";
  for (int k = 0; k < K; ++k) {
    ValidateRow row;
    row.user = k;
    row.sinr = users[k].sinr;
    row.capacity = users[k].capacity;
    row.z = users[k].z;
    row.closed_form = users[k].sop;
    row.empirical = static_cast<double>(outages[k]) / spec.mc_samples;
    row.gap = std::abs(row.closed_form - row.empirical);
    const double p = row.closed_form;
    row.threshold = 3.0 * std::sqrt(p * (1.0 - p) / spec.mc_samples) + 0.005;
    row.pass = row.gap <= row.threshold;
    report.pass = report.pass && row.pass;
    csv << fmt::format("{},{},{},{},{},{},{},{},{}\r\n", row.user, csv_number(row.sinr),
                       csv_number(row.capacity), csv_number(row.z),
                       csv_number(row.closed_form), csv_number(row.empirical),
                       csv_number(row.gap), csv_number(row.threshold),
                       row.pass ? "true" : "false");
    report.rows.push_back(row);
  }
  csv.flush();
  return report;
}

OptimizeReport cmd_optimize(const ExperimentSpec& spec, std::ostream& csv) {
  spec.validate();
  const SystemConfig cfg = spec.system();
  const std::uint64_t seed = trial_seed(spec.seed, 0);
  Rng channel_rng(seed, Stream::kChannels);
  const ChannelSet chs = sample_channels(cfg, channel_rng);

  csv << "scheme,iteration,max_sop,min_sop,incumbent_max_sop,initial_max_sop,sdr_bound,"
         "recovered_objective,rank_one,dinkelbach_steps,lambda_first,lambda_last,"
         "dinkelbach_converged";
  for (int k = 1; k <= cfg.num_users; ++k) csv << fmt::format(",sinr_{}", k);
  for (int k = 1; k <= cfg.num_users; ++k) csv << fmt::format(",sop_{}", k);
  if (spec.timing) csv << ",wall_ms";
  csv << "\r\n";

  OptimizeReport report;
  for (Scheme scheme : spec.schemes) {
    Rng optimizer_rng(seed, Stream::kOptimizer);
    AOResult result = run_scheme(scheme, chs, cfg, spec.ao, optimizer_rng);
    for (const auto& rec : result.trace.records) {
      const double lambda_first = rec.dinkelbach.empty() ? 0.0 : rec.dinkelbach.front().lambda_out;
      const double lambda_last = rec.dinkelbach.empty() ? 0.0 : rec.dinkelbach.back().lambda_out;
      csv << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}", to_string(scheme),
                         rec.iteration, csv_number(rec.max_sop), csv_number(rec.min_sop),
                         csv_number(rec.incumbent_max_sop),
                         csv_number(result.trace.initial_max_sop), csv_number(rec.sdr_bound),
                         csv_number(rec.recovered_objective), rec.rank_one ? "true" : "false",
                         rec.dinkelbach.size(), csv_number(lambda_first),
                         csv_number(lambda_last), rec.dinkelbach_converged ? "true" : "false");
      for (double v : rec.sinr) csv << "," << csv_number(v);
      for (double v : rec.sop) csv << "," << csv_number(v);
      if (spec.timing) csv << "," << csv_number(rec.duration_ms);
      csv << "\r\n";
    }
    report.results.push_back(std::move(result));
  }
  csv.flush();
  return report;
}

TrialOutcome run_trial(const ExperimentSpec& spec, std::optional<int> value, int trial,
                       Scheme scheme) {
  TrialOutcome out;
  out.scheme = scheme;
  out.value = value;
  out.trial = trial;
  out.seed = trial_seed(spec.seed, static_cast<std::uint64_t>(trial));
  const auto start = std::chrono::steady_clock::now();
  try {
    const SystemConfig cfg = spec.system(value);
    Rng channel_rng(out.seed, Stream::kChannels);
    Rng optimizer_rng(out.seed, Stream::kOptimizer);
    const ChannelSet chs = sample_channels(cfg, channel_rng);
    const AOResult result = run_scheme(scheme, chs, cfg, spec.ao, optimizer_rng);
    const auto users = evaluate_users(chs, result.phi, result.W, cfg);
    out.ok = true;
    out.iterations = static_cast<int>(result.trace.records.size());
    out.converged = result.trace.converged;
    out.initial_max_sop = result.trace.initial_max_sop;
    out.max_sop = max_outage(users);
    out.min_sop = min_outage(users);
    for (const auto& u : users) out.sinr.push_back(u.sinr);
    const int best = result.trace.best_iteration;
    if (best > 0) out.sdr_bound = result.trace.records[best - 1].sdr_bound;
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = failure_text(e);
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

const Aggregate* SweepReport::find(std::string_view scheme, std::optional<int> value) const {
  for (const auto& agg : aggregates) {
    if (agg.scheme == scheme && agg.value == value) return &agg;
  }
  return nullptr;
}

SweepReport cmd_sweep(const ExperimentSpec& spec, std::ostream& csv) {
  return run_sweep(spec, spec.schemes, false, csv);
}

SweepReport cmd_compare(const ExperimentSpec& spec, std::ostream& csv) {
  return run_sweep(spec, {Scheme::kMmSop, Scheme::kMmSinr}, true, csv);
}

std::string_view library_version() { return IRSSOP_VERSION; }

std::filesystem::path default_output_dir() {
  if (const char* dir = std::getenv("IRSSOP_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
    return dir;
  }
  return ".";
}

}  // namespace irssop
