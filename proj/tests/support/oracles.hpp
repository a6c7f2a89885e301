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
// Independent reference computations used by the tests. None of these call
// the library routine they check.

#pragma once

#include <cstdint>
#include <vector>

#include "irssop/channel.hpp"
#include "irssop/linalg.hpp"
#include "irssop/rng.hpp"
#include "irssop/sdp.hpp"

namespace irssop::oracle {

/// Gamma(n, x) by the recurrence Gamma(n, x) = (n - 1) Gamma(n - 1, x) + x^(n-1) e^-x.
double gamma_recurrence(int n, double x);

/// Gamma(eps, x) by composite Simpson on [x, x + span] after t = z - x.
double gamma_quadrature(double eps, double x);

/// SINR_k assembled from an explicit interference matrix and power diagonal.
double explicit_sinr(const ChannelSet& chs, const PhaseShift& phi, const ReceiveMatrix& W,
                     const SystemConfig& cfg, int k);

/// z_k = phi_k / (1 + |f_k|^2) from an explicit SINR.
double explicit_z(const ChannelSet& chs, const PhaseShift& phi, const ReceiveMatrix& W,
                  const SystemConfig& cfg, int k);

CVector random_unit_vector(int n, Rng& rng);
CMatrix random_hermitian(int n, Rng& rng);
/// B = X X^H + shift I.
CMatrix random_pd(int n, Rng& rng, double shift = 0.1);
/// V diag(lambda) V^H with lambda >= 0 drawn from |CN(0,1)|^2, rank <= n.
CMatrix random_psd(int n, Rng& rng, int rank);

/// max tr(C Q) over {Q >= 0, diag(Q) = 1}: factor Q = V V^H with unit rows,
/// V in C^{n x r}, and maximize row by row (each row update is exact) from
/// several random starts.
double maxcut_value(const CMatrix& C, std::uint64_t seed, int restarts = 4, int rank = 0);

/// Optimum of an SdpInstance with at most three inequalities through its
/// dual: min over mu in the simplex of sum mu_k a_k + maxcut_value(sum mu_k C_k),
/// which is convex in mu and minimized by nested ternary search.
double sdp_bruteforce(const SdpInstance& inst, std::uint64_t seed);

/// Best min_k z_k (or SINR_k) over all theta in {0, pi/2, pi, 3pi/2}^Ns.
double grid_best(const ChannelSet& chs, const ReceiveMatrix& W, const SystemConfig& cfg,
                 bool sinr_objective);

/// Monte Carlo secrecy outage rate of user k at (phi, W).
double empirical_outage(const ChannelSet& chs, const PhaseShift& phi, const ReceiveMatrix& W,
                        const SystemConfig& cfg, int k, int samples, std::uint64_t seed);

}  // namespace irssop::oracle
