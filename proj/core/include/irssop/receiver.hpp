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

#include "irssop/channel.hpp"

namespace irssop {

/// Per-user receive vectors maximizing z_k at a fixed phase shift.
///
/// Each w_k is the leading generalized eigenvector of (A_k, B_k), unit
/// normalized with its largest-magnitude entry real. Users decouple, so this
/// solves the receiver subproblem exactly. A user whose effective channel is
/// exactly zero gets the first standard basis vector.
ReceiveMatrix optimize_receivers(const ChannelSet& chs, const PhaseShift& phi,
                                 const SystemConfig& cfg);

}  // namespace irssop
