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

#include "irssop/sdp.hpp"

namespace irssop::detail {

/// Instance data divided by one positive scale so the largest |a_k| or
/// |C_k|_F is one.
struct ScaledInstance {
  int dim = 0;
  int count = 0;
  std::vector<CMatrix> C;
  RVector a;
  double scale = 1.0;
};

ScaledInstance scale_instance(const SdpInstance& inst);

/// PSD projection followed by rescaling to unit diagonal; rows with a
/// vanishing diagonal are replaced by the identity row.
CMatrix polish(const CMatrix& Q);

/// min_k a_k + tr(C_k Q), unscaled.
double epigraph_value(const SdpInstance& inst, const CMatrix& Q);

SdpSolution solve_operator_splitting(const SdpInstance& inst, const SdpOptions& options);
SdpSolution solve_interior_point(const SdpInstance& inst, const SdpOptions& options);

}  // namespace irssop::detail
