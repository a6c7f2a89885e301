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
#include "irssop/channel.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "irssop/errors.hpp"

namespace irssop {
namespace {

void check_user(int k, int num_users) {
  if (k < 0 || k >= num_users) {
    throw Error(ErrorCode::kIndexOutOfRange,
                fmt::format("user index {} outside [0, {})", k, num_users));
  }
}

void check_phase(const ChannelSet& chs, const PhaseShift& phi) {
  if (phi.size() != chs.irs_elements()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("phase shift has {} elements, IRS has {}", phi.size(),
                            chs.irs_elements()));
  }
}

double wrap_angle(double theta) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

}  // namespace

SystemConfig SystemConfig::from_snr(int num_users, int bs_antennas, int irs_elements,
                                    int eve_antennas, double snr_db, double rate,
                                    std::uint64_t seed) {
  SystemConfig cfg;
  cfg.num_users = num_users;
  cfg.bs_antennas = bs_antennas;
  cfg.irs_elements = irs_elements;
  cfg.eve_antennas = eve_antennas;
  cfg.sigma2_b = 1.0;
  cfg.sigma2_e = 1.0;
  cfg.rho.assign(num_users > 0 ? num_users : 0, std::pow(10.0, snr_db / 10.0));
  cfg.rate.assign(num_users > 0 ? num_users : 0, rate);
  cfg.seed = seed;
  return cfg;
}

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidConfig, msg); };
  if (num_users < 1) fail(fmt::format("K must be >= 1, got {}", num_users));
  if (bs_antennas < 1) fail(fmt::format("Nt must be >= 1, got {}", bs_antennas));
  if (irs_elements < 1) fail(fmt::format("Ns must be >= 1, got {}", irs_elements));
  if (eve_antennas < 1) fail(fmt::format("Ne must be >= 1, got {}", eve_antennas));
  if (static_cast<int>(rho.size()) != num_users) {
    fail(fmt::format("rho has {} entries, expected K = {}", rho.size(), num_users));
  }
  if (static_cast<int>(rate.size()) != num_users) {
    fail(fmt::format("rate has {} entries, expected K = {}", rate.size(), num_users));
  }
  for (double p : rho) {
    if (!(p > 0.0) || !std::isfinite(p)) fail(fmt::format("rho entries must be > 0, got {}", p));
  }
  for (double r : rate) {
    if (!(r > 0.0) || !std::isfinite(r)) fail(fmt::format("rate entries must be > 0, got {}", r));
  }
  if (!(sigma2_b > 0.0)) fail(fmt::format("sigma2_b must be > 0, got {}", sigma2_b));
  if (!(sigma2_e > 0.0)) fail(fmt::format("sigma2_e must be > 0, got {}", sigma2_e));
}

CVector ChannelSet::h(int k) const {
  check_user(k, num_users());
  return H.col(k);
}

CVector ChannelSet::f(int k) const {
  check_user(k, num_users());
  return F.col(k);
}

void ChannelSet::check_against(const SystemConfig& cfg) const {
  const bool ok = H.rows() == cfg.bs_antennas && H.cols() == cfg.num_users &&
                  G.rows() == cfg.bs_antennas && G.cols() == cfg.irs_elements &&
                  F.rows() == cfg.irs_elements && F.cols() == cfg.num_users;
  if (!ok) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("channel set H {}x{}, G {}x{}, F {}x{} does not match "
                            "K={}, Nt={}, Ns={}",
                            H.rows(), H.cols(), G.rows(), G.cols(), F.rows(), F.cols(),
                            cfg.num_users, cfg.bs_antennas, cfg.irs_elements));
  }
}

void ReceiveMatrix::check_unit_norm(double tol) const {
  for (int k = 0; k < num_users(); ++k) {
    const double n = vectors.col(k).norm();
    if (std::abs(n - 1.0) > tol) {
      throw Error(ErrorCode::kDomainError,
                  fmt::format("receive vector {} has norm {}, expected 1", k, n));
    }
  }
}

PhaseShift::PhaseShift(RVector theta) : theta_(std::move(theta)) {
  for (Eigen::Index n = 0; n < theta_.size(); ++n) theta_(n) = wrap_angle(theta_(n));
}

PhaseShift PhaseShift::identity(int irs_elements) {
  return PhaseShift(RVector::Zero(irs_elements));
}

PhaseShift PhaseShift::random(int irs_elements, Rng& rng) {
  RVector theta(irs_elements);
  for (int n = 0; n < irs_elements; ++n) theta(n) = rng.angle();
  return PhaseShift(std::move(theta));
}

PhaseShift PhaseShift::from_complex(const CVector& q) {
  RVector theta(q.size());
  for (Eigen::Index n = 0; n < q.size(); ++n) {
    theta(n) = q(n) == Complex(0.0, 0.0) ? 0.0 : std::arg(q(n));
  }
  return PhaseShift(std::move(theta));
}

CVector PhaseShift::diagonal() const {
  CVector q(theta_.size());
  for (Eigen::Index n = 0; n < theta_.size(); ++n) q(n) = std::polar(1.0, theta_(n));
  return q;
}

ChannelSet sample_channels(const SystemConfig& cfg, Rng& rng) {
  cfg.validate();
  ChannelSet chs;
  chs.H = rng.complex_normal_matrix(cfg.bs_antennas, cfg.num_users);
  chs.G = rng.complex_normal_matrix(cfg.bs_antennas, cfg.irs_elements);
  chs.F = rng.complex_normal_matrix(cfg.irs_elements, cfg.num_users);
  return chs;
}

EveChannelSample sample_eve_channels(const SystemConfig& cfg, Rng& rng) {
  cfg.validate();
  EveChannelSample eve;
  eve.h_e = rng.complex_normal_matrix(cfg.eve_antennas, cfg.num_users);
  eve.G_e = rng.complex_normal_matrix(cfg.eve_antennas, cfg.irs_elements);
  return eve;
}

CVector effective_channel(const ChannelSet& chs, const PhaseShift& phi, int k) {
  check_user(k, chs.num_users());
  check_phase(chs, phi);
  return chs.H.col(k) + chs.G * phi.diagonal().cwiseProduct(chs.F.col(k));
}

CMatrix effective_channels(const ChannelSet& chs, const PhaseShift& phi) {
  check_phase(chs, phi);
  return chs.H + chs.G * (phi.diagonal().asDiagonal() * chs.F);
}

CMatrix interference_matrix(const ChannelSet& chs, const PhaseShift& phi, int k) {
  check_user(k, chs.num_users());
  const CMatrix eff = effective_channels(chs, phi);
  CMatrix out(eff.rows(), eff.cols() - 1);
  for (int i = 0, col = 0; i < eff.cols(); ++i) {
    if (i != k) out.col(col++) = eff.col(i);
  }
  return out;
}

CMatrix cascaded_channel(const ChannelSet& chs, int k) {
  check_user(k, chs.num_users());
  return chs.G * chs.F.col(k).asDiagonal();
}

}  // namespace irssop
