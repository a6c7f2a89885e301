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
#include "irssop/lift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "irssop/errors.hpp"
#include "irssop/secrecy.hpp"

namespace irssop {
namespace {

// tr(M Q) for Hermitian M and Q; the imaginary part vanishes.
double trace_product(const CMatrix& M, const CMatrix& Q) {
  return (M.cwiseProduct(Q.transpose())).sum().real();
}

}  // namespace

void LiftedProblem::validate() const {
  const auto pairs = static_cast<std::size_t>(num_users) * num_users;
  const auto users = static_cast<std::size_t>(num_users);
  if (dim < 1 || num_users < 1 || blocks.size() != pairs || v_values.size() != pairs ||
      t.size() != users || c1.size() != users || c2.size() != users || rho.size() != users) {
    throw Error(ErrorCode::kMalformedLift,
                fmt::format("lifted problem sizes inconsistent (dim {}, K {})", dim, num_users));
  }
  for (const CMatrix& M : blocks) {
    if (M.rows() != dim || M.cols() != dim || !is_hermitian(M)) {
      throw Error(ErrorCode::kMalformedLift, "lifted block is not a Hermitian dim x dim matrix");
    }
  }
}

CMatrix constraint_selector(int dim, int n) {
  if (n < 0 || n >= dim) {
    throw Error(ErrorCode::kIndexOutOfRange,
                fmt::format("selector index {} outside [0, {})", n, dim));
  }
  CMatrix E = CMatrix::Zero(dim, dim);
  E(n, n) = 1.0;
  return E;
}

LiftedProblem build_lift(const ChannelSet& chs, const ReceiveMatrix& W, const SystemConfig& cfg,
                         Objective objective) {
  cfg.validate();
  chs.check_against(cfg);
  if (W.vectors.rows() != cfg.bs_antennas || W.vectors.cols() != cfg.num_users) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("receive matrix is {}x{}, expected {}x{}", W.vectors.rows(),
                            W.vectors.cols(), cfg.bs_antennas, cfg.num_users));
  }
  W.check_unit_norm(1e-8);

  const int K = cfg.num_users;
  const int ns = cfg.irs_elements;
  LiftedProblem lp;
  lp.dim = ns + 1;
  lp.num_users = K;
  lp.objective = objective;
  lp.blocks.resize(static_cast<std::size_t>(K) * K);
  lp.v_values.resize(static_cast<std::size_t>(K) * K);
  lp.rho = cfg.rho;

  for (int i = 0; i < K; ++i) {
    const CMatrix E = cascaded_channel(chs, i);
    for (int k = 0; k < K; ++k) {
      const CVector w = W.vectors.col(k);
      // With g = E_i^H w_k and s = w_k^H h_i:
      //   M = [[g g^H, g s], [conj(s) g^H, 0]], v = |s|^2,
      // so [q; 1]^H M [q; 1] + v = |g^H q + s|^2 = |w_k^H (h_i + E_i q)|^2.
      const CVector g = E.adjoint() * w;
      const Complex s = w.dot(chs.H.col(i));
      CMatrix M = CMatrix::Zero(lp.dim, lp.dim);
      M.topLeftCorner(ns, ns) = g * g.adjoint();
      M.topRightCorner(ns, 1) = g * s;
      M.bottomLeftCorner(1, ns) = std::conj(s) * g.adjoint();
      lp.blocks[i * K + k] = std::move(M);
      lp.v_values[i * K + k] = std::norm(s);
    }
  }

  for (int k = 0; k < K; ++k) {
    lp.t.push_back(cfg.sigma2_b * W.vectors.col(k).squaredNorm());
    if (objective == Objective::kOutage) {
      const double gain = 1.0 + chs.F.col(k).squaredNorm();
      const double scale = std::exp2(cfg.rate[k]);
      lp.c1.push_back(cfg.sigma2_e / (scale * gain));
      lp.c2.push_back(cfg.sigma2_e * (1.0 - scale) / (cfg.rho[k] * scale * gain));
    } else {
      lp.c1.push_back(cfg.rho[k]);
      lp.c2.push_back(0.0);
    }
  }
  return lp;
}

CVector homogenize(const PhaseShift& phi) {
  CVector q_hat(phi.size() + 1);
  q_hat.head(phi.size()) = phi.diagonal();
  q_hat(phi.size()) = 1.0;
  return q_hat;
}

AffineValue eval_affine_forms(const LiftedProblem& lp, const CMatrix& Q, int k) {
  if (Q.rows() != lp.dim || Q.cols() != lp.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("Q is {}x{}, lift dimension is {}", Q.rows(), Q.cols(), lp.dim));
  }
  if (k < 0 || k >= lp.num_users) {
    throw Error(ErrorCode::kIndexOutOfRange,
                fmt::format("user index {} outside [0, {})", k, lp.num_users));
  }
  AffineValue out;
  out.denominator = lp.t[k];
  for (int i = 0; i < lp.num_users; ++i) {
    if (i == k) continue;
    out.denominator += lp.rho[i] * (trace_product(lp.M(i, k), Q) + lp.v(i, k));
  }
  out.numerator =
      lp.c1[k] * (trace_product(lp.M(k, k), Q) + lp.v(k, k)) + lp.c2[k] * out.denominator;
  return out;
}

double min_ratio(const LiftedProblem& lp, const CMatrix& Q) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < lp.num_users; ++k) best = std::min(best, eval_affine_forms(lp, Q, k).ratio());
  return best;
}

double phase_objective(Objective objective, const ChannelSet& chs, const PhaseShift& phi,
                       const ReceiveMatrix& W, const SystemConfig& cfg) {
  const auto users = evaluate_users(chs, phi, W, cfg);
  return objective == Objective::kOutage ? min_z(users) : min_sinr(users);
}

PhaseShift dehomogenize(const CVector& q_hat) {
  const Eigen::Index ns = q_hat.size() - 1;
  const Complex last = q_hat(ns);
  const double reference = last == Complex(0.0, 0.0) ? 0.0 : std::arg(last);
  RVector theta(ns);
  for (Eigen::Index n = 0; n < ns; ++n) {
    theta(n) = (q_hat(n) == Complex(0.0, 0.0) ? 0.0 : std::arg(q_hat(n))) - reference;
  }
  return PhaseShift(std::move(theta));
}

PhaseRecovery recover_phase(const CMatrix& Q, const LiftedProblem& lp, const ChannelSet& chs,
                            const ReceiveMatrix& W, const SystemConfig& cfg, Rng& rng,
                            int samples) {
  if (Q.rows() != lp.dim || Q.cols() != lp.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("Q is {}x{}, lift dimension is {}", Q.rows(), Q.cols(), lp.dim));
  }
  if (samples < 0) {
    throw Error(ErrorCode::kDomainError, fmt::format("negative sample count {}", samples));
  }
  const EigResult eig = herm_eig(Q);
  const Eigen::Index n = eig.eigenvalues.size();
  const double largest = eig.eigenvalues(n - 1);
  if (!(largest > 0.0) || eig.eigenvalues(0) < -1e-8 * std::max(1.0, largest)) {
    throw Error(ErrorCode::kNotPsd,
                fmt::format("recover_phase: eigenvalues span [{}, {}]", eig.eigenvalues(0),
                            largest));
  }

  PhaseRecovery best;
  best.phi = dehomogenize(eig.eigenvectors.col(n - 1));
  best.objective = phase_objective(lp.objective, chs, best.phi, W, cfg);
  best.candidates = 1;
  const double second = n > 1 ? eig.eigenvalues(n - 2) : 0.0;
  best.rank_one = second <= kRankOneRatio * largest;
  if (best.rank_one) return best;

  // xi = V diag(sqrt(lambda)) r with r ~ CN(0, I) has covariance Q.
  const CMatrix factor =
      eig.eigenvectors * eig.eigenvalues.cwiseMax(0.0).cwiseSqrt().asDiagonal();
  CVector r(n);
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < n; ++i) r(i) = rng.complex_normal();
    PhaseShift candidate = dehomogenize(factor * r);
    const double value = phase_objective(lp.objective, chs, candidate, W, cfg);
    ++best.candidates;
    if (value > best.objective) {
      best.objective = value;
      best.phi = std::move(candidate);
    }
  }
  return best;
}

}  // namespace irssop
