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
#include "irssop/receiver.hpp"

#include "irssop/linalg.hpp"
#include "irssop/secrecy.hpp"

namespace irssop {

ReceiveMatrix optimize_receivers(const ChannelSet& chs, const PhaseShift& phi,
                                 const SystemConfig& cfg) {
  cfg.validate();
  chs.check_against(cfg);
  ReceiveMatrix W;
  W.vectors = CMatrix::Zero(cfg.bs_antennas, cfg.num_users);
  for (int k = 0; k < cfg.num_users; ++k) {
    const RatioForm form = ratio_form(chs, phi, cfg, k);
    if (form.A.cwiseAbs().maxCoeff() == 0.0) {
      W.vectors(0, k) = 1.0;
      continue;
    }
    // c1 > 0, so the argmax of z_k is the argmax of the quotient.
    W.vectors.col(k) = generalized_max_eigvec(form.A, form.B).vector;
  }
  return W;
}

}  // namespace irssop
