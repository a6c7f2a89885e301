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
#include "irssop/rng.hpp"

namespace irssop {

/// Which per-user ratio the phase subproblem maximizes the minimum of.
enum class Objective {
  kOutage,  // z_k: c1 = sigma_e^2 / (2^R (1 + |f|^2)), c2 < 0
  kSinr,    // SINR_k: c1 = rho_k, c2 = 0
};

/// Homogenized quadratic representation of the phase subproblem at a fixed
/// receive matrix.
///
/// With q_hat = [q; 1] and Q = q_hat q_hat^H,
///   |w_k^H (h_i + G Phi f_i)|^2 = tr(M(i,k) Q) + v(i,k),
///   N_k(Q) = c1_k (tr(M(k,k) Q) + v(k,k)) + c2_k D_k(Q),
///   D_k(Q) = sum_{i != k} rho_i (tr(M(i,k) Q) + v(i,k)) + t_k.
struct LiftedProblem {
  int dim = 0;  // Ns + 1
  int num_users = 0;
  Objective objective = Objective::kOutage;
  std::vector<CMatrix> blocks;  // M(i,k) stored at i * K + k
  std::vector<double> v_values;
  std::vector<double> t;
  std::vector<double> c1;
  std::vector<double> c2;
  std::vector<double> rho;

  const CMatrix& M(int i, int k) const { return blocks[i * num_users + k]; }
  double v(int i, int k) const { return v_values[i * num_users + k]; }

  /// Throws kMalformedLift on inconsistent sizes or non-Hermitian blocks.
  void validate() const;
};

/// Selector E_n with a single 1 at (n, n), n in [0, dim).
CMatrix constraint_selector(int dim, int n);

/// Assembles every M(i,k), v(i,k), t_k and the objective constants.
LiftedProblem build_lift(const ChannelSet& chs, const ReceiveMatrix& W,
                         const SystemConfig& cfg,
                         Objective objective = Objective::kOutage);

/// [q; 1] for a phase shift.
CVector homogenize(const PhaseShift& phi);

struct AffineValue {
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio() const { return numerator / denominator; }
};

/// N_k(Q) and D_k(Q).
AffineValue eval_affine_forms(const LiftedProblem& lp, const CMatrix& Q, int k);

/// min_k N_k(Q) / D_k(Q).
double min_ratio(const LiftedProblem& lp, const CMatrix& Q);

/// Exact value of the objective at (phi, W): min_k z_k for kOutage, min_k
/// SINR_k for kSinr.
double phase_objective(Objective objective, const ChannelSet& chs,
                       const PhaseShift& phi, const ReceiveMatrix& W,
                       const SystemConfig& cfg);

/// Unit-modulus projection with de-homogenization:
/// theta_n = arg(q_hat_n) - arg(q_hat_last).
PhaseShift dehomogenize(const CVector& q_hat);

struct PhaseRecovery {
  PhaseShift phi;
  double objective = 0.0;  // phase_objective at the returned phi
  bool rank_one = false;
  int candidates = 0;
};

/// Eigenvalue ratio lambda_2 / lambda_1 at or below which Q is rank one.
inline constexpr double kRankOneRatio = 1e-6;

/// Phase shift from a relaxed solution Q.
///
/// A rank-one Q yields its leading eigenvector directly. Otherwise
/// `samples` Gaussian candidates xi ~ CN(0, Q) are drawn, each projected to
/// unit modulus, and the best by phase_objective is kept; the leading
/// eigenvector competes as one extra candidate. Throws kNotPsd if Q has an
/// eigenvalue below -1e-8 (scaled by its largest).
PhaseRecovery recover_phase(const CMatrix& Q, const LiftedProblem& lp,
                            const ChannelSet& chs, const ReceiveMatrix& W,
                            const SystemConfig& cfg, Rng& rng, int samples);

}  // namespace irssop
