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

#include <vector>

#include "irssop/channel.hpp"
#include "irssop/linalg.hpp"

namespace irssop {

/// Upper incomplete Gamma function, integral of exp(-z) z^(eps-1) over
/// [eta, inf).
///
/// Integer orders use the finite-sum closed form; other orders fall back to
/// the series / continued-fraction pair. Throws kDomainError for eps <= 0 or
/// eta < 0.
double upper_incomplete_gamma(double eps, double eta);

/// Gamma(eps, eta) / Gamma(eps), in [0, 1].
double regularized_upper_gamma(double eps, double eta);

/// Everything known about one user at a fixed (Phi, W).
struct UserMetrics {
  double sinr = 0.0;
  double capacity = 0.0;  // C_m = log2(1 + sinr)
  double phi = 0.0;       // sigma_e^2 (2^(C_m - R) - 1) / rho, may be < 0
  double z = 0.0;         // phi / (1 + |f_k|^2)
  double sop = 1.0;       // secrecy outage probability
};

/// c1 (w^H A w / w^H B w) + c2 = z_k, with A rank one and B >= sigma_b^2 I.
struct RatioForm {
  double c1 = 0.0;
  double c2 = 0.0;
  CMatrix A;
  CMatrix B;
};

/// rho_k |w_k^H a_k|^2 / w_k^H (K_k P K_k^H + sigma_b^2 I) w_k.
double sinr(const ChannelSet& chs, const PhaseShift& phi, const ReceiveMatrix& W,
            const SystemConfig& cfg, int k);

/// Closed-form outage probability of user k given its main-channel capacity.
/// Returns 1 whenever C_m <= R_k.
double secrecy_outage_probability(double capacity, const SystemConfig& cfg,
                                  const CVector& f_k, int k);

/// Auxiliary objective z_k = phi_k / (1 + |Phi f_k|^2).
double z_value(const ChannelSet& chs, const PhaseShift& phi, const ReceiveMatrix& W,
               const SystemConfig& cfg, int k);

RatioForm ratio_form(const ChannelSet& chs, const PhaseShift& phi,
                     const SystemConfig& cfg, int k);

/// Metrics derived from an already computed SINR.
UserMetrics metrics_from_sinr(double sinr_value, const SystemConfig& cfg,
                              const CVector& f_k, int k);

/// Metrics of every user; one pass over the effective channels.
std::vector<UserMetrics> evaluate_users(const ChannelSet& chs, const PhaseShift& phi,
                                        const ReceiveMatrix& W, const SystemConfig& cfg);

/// max_k sop_k.
double max_outage(const std::vector<UserMetrics>& users);
/// min_k sop_k.
double min_outage(const std::vector<UserMetrics>& users);
double min_z(const std::vector<UserMetrics>& users);
double min_sinr(const std::vector<UserMetrics>& users);

}  // namespace irssop
