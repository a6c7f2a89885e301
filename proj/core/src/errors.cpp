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
#include "irssop/errors.hpp"

namespace irssop {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "not_hermitian";
    case ErrorCode::kNoConvergence: return "no_convergence";
    case ErrorCode::kNotPositiveDefinite: return "not_positive_definite";
    case ErrorCode::kNotPsd: return "not_psd";
    case ErrorCode::kDomainError: return "domain_error";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kInvalidConfig: return "invalid_config";
    case ErrorCode::kMaxOuterIterations: return "max_outer_iterations";
    case ErrorCode::kMalformedLift: return "malformed_lift";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace irssop
