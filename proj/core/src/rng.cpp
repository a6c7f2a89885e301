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
#include "irssop/rng.hpp"

#include <cmath>
#include <numbers>

namespace irssop {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t index) {
  return mix64(base_seed ^ mix64(index + 0x5851F42D4C957F2DULL));
}

double Rng::angle() {
  // uniform() is in (0, 1]; map to [0, 2 pi).
  return 2.0 * std::numbers::pi * (1.0 - uniform());
}

Complex Rng::complex_normal() {
  // Box-Muller: the two outputs of one transform are independent N(0, 1/2).
  const double radius = std::sqrt(-std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

CMatrix Rng::complex_normal_matrix(int rows, int cols) {
  CMatrix out(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) out(i, j) = complex_normal();
  }
  return out;
}

}  // namespace irssop
