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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irssop/linalg.hpp"

namespace irssop {

/// maximize u
/// subject to Q >= 0, Q_nn = 1 for every n, u <= a_k + tr(C_k Q) for every k.
struct SdpInstance {
  int dim = 0;
  std::vector<CMatrix> C;  // Hermitian, dim x dim
  std::vector<double> a;

  int num_inequalities() const { return static_cast<int>(C.size()); }

  /// Throws kDimensionMismatch / kNotHermitian / kDomainError.
  void validate() const;
};

enum class SdpStatus { kOptimal, kMaxIterations, kInfeasible };

enum class SdpMethod {
  kInteriorPoint,     // primal-dual path following, HKM direction
  kOperatorSplitting  // ADMM between the affine set and the cone
};

const char* to_string(SdpStatus status);

/// Solver state that can seed a later solve of a nearby instance.
struct SdpWarmStart {
  CMatrix Q;
  CMatrix dual_Q;
  RVector dual_s;
  double dual_u = 0.0;
  double penalty = 1.0;
};

struct SdpOptions {
  SdpMethod method = SdpMethod::kInteriorPoint;
  double tol = 1e-6;
  /// Cap for operator splitting; interior point stops at min(max_iter, 200).
  int max_iter = 50000;
  double relaxation = 1.5;
  double initial_penalty = 1.0;
  /// Residual balancing: rescale the penalty when one residual exceeds the
  /// other by this factor.
  double balance_ratio = 10.0;
  int balance_interval = 25;
  /// Operator splitting only; the interior-point method always cold starts.
  std::optional<SdpWarmStart> warm_start;
};

struct SdpSolution {
  CMatrix Q;  // PSD with exactly unit diagonal
  double u = 0.0;  // min_k a_k + tr(C_k Q) at the returned Q
  SdpStatus status = SdpStatus::kMaxIterations;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  std::vector<double> primal_history;  // primal residual per iteration
  SdpWarmStart state;
};

/// Solves an SdpInstance with the method selected in \p options.
///
/// Both methods work on data scaled to unit size with slacks s_k >= 0 for
/// the inequalities.
///
/// Interior point: u is shifted by a known lower bound (its value at Q = I,
/// minus one) so that every variable lives in a cone, and a Mehrotra
/// predictor-corrector iteration with the HKM search direction runs on the
/// block (Hermitian PSD, nonnegative orthant). The Schur complement has only
/// dim + K rows. Converged when relative gap and infeasibilities are <= tol.
///
/// Operator splitting: ADMM between the affine set
/// {diag(Q) = 1, a_k + tr(C_k Q) - u - s_k = 0}, projected through a cached
/// Cholesky factor of its Gram matrix, and the cone {Q >= 0, s >= 0}, with
/// over-relaxation and residual-balanced penalty updates.
///
/// Either way the returned Q is polished onto the exact feasible set (PSD
/// projection, then diagonal rescaling), so constraint residuals of the
/// returned point are at rounding level and u is recomputed from it.
SdpSolution solve(const SdpInstance& inst, const SdpOptions& options = {});
SdpSolution solve(const SdpInstance& inst, double tol, int max_iter);

/// Plain-text instance dump:
///
///   irssop-sdp 1
///   dim <n>
///   inequalities <K>
///   a <a_1> ... <a_K>
///   C <k>             (then n rows of n "re im" pairs)
///
/// Values are printed with 17 significant digits, so load(dump(x)) == x.
void dump_instance(const SdpInstance& inst, std::ostream& out);
std::string dump_instance(const SdpInstance& inst);
SdpInstance load_instance(std::istream& in);
SdpInstance load_instance_from_string(const std::string& text);

}  // namespace irssop
