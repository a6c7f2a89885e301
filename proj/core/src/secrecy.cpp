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
#include "irssop/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "irssop/errors.hpp"

namespace irssop {
namespace {

constexpr int kMaxSeriesTerms = 10000;
constexpr double kGammaEps = 1e-16;

void check_gamma_domain(double eps, double eta) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::kDomainError, fmt::format("incomplete gamma: order {} <= 0", eps));
  }
  if (!(eta >= 0.0)) {
    throw Error(ErrorCode::kDomainError, fmt::format("incomplete gamma: lower limit {} < 0", eta));
  }
}

bool is_small_integer(double eps) { return eps == std::floor(eps) && eps <= 170.0; }

// Q(n, x) = exp(-x) sum_{m < n} x^m / m!, terms formed in log space.
double regularized_upper_integer(int n, double x) {
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  const double log_x = std::log(x);
  double sum = 0.0;
  for (int m = 0; m < n; ++m) {
    sum += std::exp(-x + m * log_x - std::lgamma(m + 1.0));
  }
  return std::min(sum, 1.0);
}

// Lower regularized P(a, x) by its power series; valid for x < a + 1.
double regularized_lower_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kGammaEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized Q(a, x) by modified Lentz continued fraction; x >= a + 1.
double regularized_upper_fraction(double a, double x) {
  constexpr double kTiny = std::numeric_limits<double>::min() / kGammaEps;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxSeriesTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kGammaEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double denominator_without_noise(const CMatrix& eff, const CVector& w,
                                 const SystemConfig& cfg, int k) {
  double interference = 0.0;
  for (int i = 0; i < eff.cols(); ++i) {
    if (i == k) continue;
    interference += cfg.rho[i] * std::norm(w.dot(eff.col(i)));
  }
  return interference;
}

double sinr_from_effective(const CMatrix& eff, const CVector& w, const SystemConfig& cfg,
                           int k) {
  const double signal = cfg.rho[k] * std::norm(w.dot(eff.col(k)));
  const double den = denominator_without_noise(eff, w, cfg, k) + cfg.sigma2_b * w.squaredNorm();
  return signal / den;
}

void check_inputs(const ChannelSet& chs, const ReceiveMatrix& W, const SystemConfig& cfg) {
  cfg.validate();
  chs.check_against(cfg);
  if (W.vectors.rows() != cfg.bs_antennas || W.vectors.cols() != cfg.num_users) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("receive matrix is {}x{}, expected Nt x K = {}x{}", W.vectors.rows(),
                            W.vectors.cols(), cfg.bs_antennas, cfg.num_users));
  }
}

void check_user(int k, const SystemConfig& cfg) {
  if (k < 0 || k >= cfg.num_users) {
    throw Error(ErrorCode::kIndexOutOfRange,
                fmt::format("user index {} outside [0, {})", k, cfg.num_users));
  }
}

}  // namespace

double regularized_upper_gamma(double eps, double eta) {
  check_gamma_domain(eps, eta);
  if (eta == 0.0) return 1.0;
  // Below the mode the finite sum for integer eps loses monotonicity near 1.
  if (eta < eps + 1.0) return std::clamp(1.0 - regularized_lower_series(eps, eta), 0.0, 1.0);
  if (is_small_integer(eps)) return regularized_upper_integer(static_cast<int>(eps), eta);
  return std::clamp(regularized_upper_fraction(eps, eta), 0.0, 1.0);
}

double upper_incomplete_gamma(double eps, double eta) {
  return regularized_upper_gamma(eps, eta) * std::tgamma(eps);
}

double sinr(const ChannelSet& chs, const PhaseShift& phi, const ReceiveMatrix& W,
            const SystemConfig& cfg, int k) {
  check_inputs(chs, W, cfg);
  check_user(k, cfg);
  return sinr_from_effective(effective_channels(chs, phi), W.vectors.col(k), cfg, k);
}

double secrecy_outage_probability(double capacity, const SystemConfig& cfg,
                                  const CVector& f_k, int k) {
  cfg.validate();
  check_user(k, cfg);
  if (!(capacity >= 0.0)) {
    throw Error(ErrorCode::kDomainError, fmt::format("capacity {} < 0", capacity));
  }
  const double phi = cfg.sigma2_e * (std::exp2(capacity - cfg.rate[k]) - 1.0) / cfg.rho[k];
  if (phi <= 0.0) return 1.0;
  return regularized_upper_gamma(cfg.eve_antennas, phi / (1.0 + f_k.squaredNorm()));
}

UserMetrics metrics_from_sinr(double sinr_value, const SystemConfig& cfg, const CVector& f_k,
                              int k) {
  UserMetrics m;
  m.sinr = sinr_value;
  m.capacity = std::log2(1.0 + sinr_value);
  // 2^(C_m - R) = (1 + SINR) 2^-R, formed without the log round trip.
  m.phi = cfg.sigma2_e * ((1.0 + sinr_value) * std::exp2(-cfg.rate[k]) - 1.0) / cfg.rho[k];
  m.z = m.phi / (1.0 + f_k.squaredNorm());
  m.sop = m.phi <= 0.0 ? 1.0 : regularized_upper_gamma(cfg.eve_antennas, m.z);
  return m;
}

double z_value(const ChannelSet& chs, const PhaseShift& phi, const ReceiveMatrix& W,
               const SystemConfig& cfg, int k) {
  const double s = sinr(chs, phi, W, cfg, k);
  // |Phi f_k| = |f_k| for unit-modulus Phi.
  return metrics_from_sinr(s, cfg, chs.F.col(k), k).z;
}

RatioForm ratio_form(const ChannelSet& chs, const PhaseShift& phi, const SystemConfig& cfg,
                     int k) {
  cfg.validate();
  chs.check_against(cfg);
  check_user(k, cfg);
  const double gain = 1.0 + chs.F.col(k).squaredNorm();
  const double scale = std::exp2(cfg.rate[k]);
  RatioForm form;
  form.c1 = cfg.sigma2_e / (scale * gain);
  form.c2 = cfg.sigma2_e * (1.0 - scale) / (cfg.rho[k] * scale * gain);
  const CVector a = effective_channel(chs, phi, k);
  form.A = a * a.adjoint();
  const CMatrix K = interference_matrix(chs, phi, k);
  RVector p(K.cols());
  for (int i = 0, col = 0; i < cfg.num_users; ++i) {
    if (i != k) p(col++) = cfg.rho[i];
  }
  form.B = K * p.asDiagonal() * K.adjoint();
  form.B += cfg.sigma2_b * CMatrix::Identity(cfg.bs_antennas, cfg.bs_antennas);
  form.B = 0.5 * (form.B + form.B.adjoint());
  return form;
}

std::vector<UserMetrics> evaluate_users(const ChannelSet& chs, const PhaseShift& phi,
                                        const ReceiveMatrix& W, const SystemConfig& cfg) {
  check_inputs(chs, W, cfg);
  const CMatrix eff = effective_channels(chs, phi);
  std::vector<UserMetrics> out;
  out.reserve(cfg.num_users);
  for (int k = 0; k < cfg.num_users; ++k) {
    out.push_back(
        metrics_from_sinr(sinr_from_effective(eff, W.vectors.col(k), cfg, k), cfg, chs.F.col(k), k));
  }
  return out;
}

double max_outage(const std::vector<UserMetrics>& users) {
  double v = 0.0;
  for (const auto& u : users) v = std::max(v, u.sop);
  return v;
}

double min_outage(const std::vector<UserMetrics>& users) {
  double v = 1.0;
  for (const auto& u : users) v = std::min(v, u.sop);
  return v;
}

double min_z(const std::vector<UserMetrics>& users) {
  double v = std::numeric_limits<double>::infinity();
  for (const auto& u : users) v = std::min(v, u.z);
  return v;
}

double min_sinr(const std::vector<UserMetrics>& users) {
  double v = std::numeric_limits<double>::infinity();
  for (const auto& u : users) v = std::min(v, u.sinr);
  return v;
}

}  // namespace irssop
