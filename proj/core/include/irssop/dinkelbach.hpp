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

#include <optional>
#include <vector>

#include "irssop/errors.hpp"
#include "irssop/lift.hpp"
#include "irssop/sdp.hpp"

namespace irssop {

/// SdpOptions with tol = 1e-8.
inline SdpOptions inner_sdp_options() {
  SdpOptions options;
  options.tol = 1e-8;
  return options;
}

struct DinkelbachOptions {
  double tau = 1e-5;
  int max_outer = 50;
  /// Inner solves run tighter than the solver default so F <= tau is meaningful.
  SdpOptions sdp = inner_sdp_options();
};

/// One pass of the parametric loop: the inner problem was solved at
/// lambda_in, yielding F and the updated lambda_out.
struct DinkelbachStep {
  double lambda_in = 0.0;
  double F = 0.0;
  double lambda_out = 0.0;
  int sdp_iterations = 0;
  SdpStatus sdp_status = SdpStatus::kOptimal;
};

struct DinkelbachState {
  double lambda = 0.0;
  double F = 0.0;
  int iteration = 0;
  std::vector<DinkelbachStep> history;
};

struct DinkelbachResult {
  CMatrix Q;  // relaxed maximizer, PSD with unit diagonal
  DinkelbachState state;
  std::optional<SdpWarmStart> solver_state;  // from the last inner solve
};

/// Raised when F is still above tau after max_outer passes. Carries the best
/// result reached so far.
class MaxOuterIterationsError : public Error {
 public:
  MaxOuterIterationsError(const std::string& what, DinkelbachResult best)
      : Error(ErrorCode::kMaxOuterIterations, what), best_(std::move(best)) {}
  const DinkelbachResult& best() const { return best_; }

 private:
  DinkelbachResult best_;
};

/// Generalized Dinkelbach iteration for max_Q min_k N_k(Q) / D_k(Q) over
/// {Q >= 0, diag(Q) = 1}.
///
/// Starting from lambda = 0, each pass solves
///   Q* = argmax_Q min_k {N_k(Q) - lambda D_k(Q)}
/// in epigraph form, sets F to that optimum and lambda to min_k N_k/D_k at Q*,
/// and repeats while F > tau. A pass whose inner solve lands below the
/// current iterate (F < 0, solver inexactness) keeps the current iterate,
/// which gives F = 0 and ends the loop; lambda therefore never decreases.
///
/// lambda = 0 is not an attained ratio, so a first pass with F < 0 means the
/// optimum is negative; the loop then continues from the attained lambda
/// instead of stopping.
///
/// `warm_Q`, when given, is the first iterate's warm start for the inner
/// solver. Throws kMalformedLift if some D_k(Q) < sigma_b^2 / 2.
DinkelbachResult dinkelbach_solve(const LiftedProblem& lp,
                                  const DinkelbachOptions& options = {},
                                  const std::optional<SdpWarmStart>& warm = std::nullopt);

/// The inner epigraph instance at a given lambda:
/// C_k = c1_k M(k,k) + (c2_k - lambda) sum_{i != k} rho_i M(i,k) and
/// a_k = c1_k v(k,k) + (c2_k - lambda) (sum_{i != k} rho_i v(i,k) + t_k).
SdpInstance parametric_instance(const LiftedProblem& lp, double lambda);

}  // namespace irssop
