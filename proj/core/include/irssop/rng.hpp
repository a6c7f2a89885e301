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

#include <cstdint>
#include <random>

#include "irssop/linalg.hpp"

namespace irssop {

/// Independent sub-streams derived from one trial seed.
enum class Stream : std::uint64_t {
  kChannels = 1,
  kOptimizer = 2,
  kEavesdropper = 3,
  kProbe = 4,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of trial `index` within a sweep rooted at `base_seed`.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t index);

/// Portable random source: std::mt19937_64 plus hand-written uniform and
/// Box-Muller transforms, so draws are bit-identical across standard
/// libraries (std::normal_distribution is not).
///
/// Streams are split by hashing (seed, stream id) through SplitMix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}
  Rng(std::uint64_t seed, Stream stream)
      : engine_(mix64(mix64(seed) ^ mix64(static_cast<std::uint64_t>(stream) *
                                          0x9E3779B97F4A7C15ULL))) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on (0, 1].
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform angle on [0, 2*pi).
  double angle();

  /// Standard circularly-symmetric complex normal CN(0, 1).
  Complex complex_normal();

  /// rows x cols matrix of i.i.d. CN(0, 1) entries, filled column-major.
  CMatrix complex_normal_matrix(int rows, int cols);

 private:
  std::mt19937_64 engine_;
};

}  // namespace irssop
