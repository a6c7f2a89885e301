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
#include "irssop/dinkelbach.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace irssop {
namespace {

double parametric_value(const LiftedProblem& lp, const CMatrix& Q, double lambda) {
  double F = std::numeric_limits<double>::infinity();
  for (int k = 0; k < lp.num_users; ++k) {
    const AffineValue nd = eval_affine_forms(lp, Q, k);
    F = std::min(F, nd.numerator - lambda * nd.denominator);
  }
  return F;
}

void check_denominators(const LiftedProblem& lp, const CMatrix& Q) {
  for (int k = 0; k < lp.num_users; ++k) {
    const double D = eval_affine_forms(lp, Q, k).denominator;
    if (!(D >= 0.5 * lp.t[k])) {
      throw Error(ErrorCode::kMalformedLift,
                  fmt::format("denominator D_{} = {} below half the noise term {}", k, D, lp.t[k]));
    }
  }
}

}  // namespace

SdpInstance parametric_instance(const LiftedProblem& lp, double lambda) {
  SdpInstance inst;
  inst.dim = lp.dim;
  for (int k = 0; k < lp.num_users; ++k) {
    const double weight = lp.c2[k] - lambda;
    CMatrix C = lp.c1[k] * lp.M(k, k);
    double a = lp.c1[k] * lp.v(k, k) + weight * lp.t[k];
    for (int i = 0; i < lp.num_users; ++i) {
      if (i == k) continue;
      C += (weight * lp.rho[i]) * lp.M(i, k);
      a += weight * lp.rho[i] * lp.v(i, k);
    }
    inst.C.push_back(std::move(C));
    inst.a.push_back(a);
  }
  return inst;
}

DinkelbachResult dinkelbach_solve(const LiftedProblem& lp, const DinkelbachOptions& options,
                                  const std::optional<SdpWarmStart>& warm) {
  lp.validate();
  if (!(options.tau > 0.0)) {
    throw Error(ErrorCode::kDomainError, fmt::format("tau must be > 0, got {}", options.tau));
  }
  if (options.max_outer < 1) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("max_outer must be >= 1, got {}", options.max_outer));
  }

  DinkelbachResult result;
  SdpOptions sdp = options.sdp;
  sdp.warm_start = warm;
  double lambda = 0.0;
  bool attained = false;  // lambda is min_k N_k/D_k at some feasible Q

  for (int pass = 1; pass <= options.max_outer; ++pass) {
    const SdpSolution sol = solve(parametric_instance(lp, lambda), sdp);
    sdp.warm_start = sol.state;
    result.solver_state = sol.state;

    CMatrix Q = sol.Q;
    check_denominators(lp, Q);
    double F = parametric_value(lp, Q, lambda);
    if (attained && F < 0.0) {
      Q = result.Q;
      F = std::max(0.0, parametric_value(lp, Q, lambda));
    }
    const double next = attained ? std::max(lambda, min_ratio(lp, Q)) : min_ratio(lp, Q);

    result.state.history.push_back({lambda, F, next, sol.iterations, sol.status});
    result.state.iteration = pass;
    result.state.F = F;
    result.state.lambda = next;
    result.Q = std::move(Q);

    const bool stop = F <= options.tau && (attained || F >= 0.0);
    lambda = next;
    attained = true;
    if (stop) return result;
  }
  throw MaxOuterIterationsError(
      fmt::format("Dinkelbach: F = {} > tau = {} after {} passes", result.state.F, options.tau,
                  options.max_outer),
      std::move(result));
}

}  // namespace irssop
