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
#include "irssop/channel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "irssop/errors.hpp"

namespace irssop {
namespace {

SystemConfig small(int K = 2, int Nt = 4, int Ns = 8, int Ne = 2) {
  return SystemConfig::from_snr(K, Nt, Ns, Ne, 1.0, 2.0);
}

TEST(SystemConfig, FromSnrAndValidation) {
  const SystemConfig cfg = SystemConfig::from_snr(4, 10, 32, 2, 10.0, 2.0);
  EXPECT_NEAR(cfg.rho[3], 10.0, 1e-12);
  EXPECT_EQ(cfg.rate.size(), 4u);
  EXPECT_NO_THROW(cfg.validate());

  auto expect_invalid = [](SystemConfig c) {
    try {
      c.validate();
      ADD_FAILURE() << "accepted an invalid config";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig);
    }
  };
  SystemConfig c = cfg;
  c.irs_elements = 0;
  expect_invalid(c);
  c = cfg;
  c.sigma2_b = 0.0;
  expect_invalid(c);
  c = cfg;
  c.rate[1] = -1.0;
  expect_invalid(c);
  c = cfg;
  c.rho.pop_back();
  expect_invalid(c);
}

TEST(SampleChannels, DeterministicAndShaped) {
  const SystemConfig cfg = small(2, 4, 8);
  Rng a(9, Stream::kChannels);
  Rng b(9, Stream::kChannels);
  const ChannelSet x = sample_channels(cfg, a);
  const ChannelSet y = sample_channels(cfg, b);
  EXPECT_EQ(x.H, y.H);
  EXPECT_EQ(x.G, y.G);
  EXPECT_EQ(x.F, y.F);
  EXPECT_EQ(x.H.rows(), 4);
  EXPECT_EQ(x.H.cols(), 2);
  EXPECT_EQ(x.G.rows(), 4);
  EXPECT_EQ(x.G.cols(), 8);
  EXPECT_EQ(x.F.rows(), 8);
  EXPECT_EQ(x.F.cols(), 2);
  EXPECT_EQ(x.h(1), x.H.col(1));
  EXPECT_EQ(x.f(0), x.F.col(0));
  EXPECT_NO_THROW(x.check_against(cfg));
  EXPECT_THROW(x.check_against(small(3, 4, 8)), Error);
}

TEST(SampleChannels, UnitVarianceEntries) {
  const SystemConfig cfg = small(4, 10, 64);
  Rng rng(10, Stream::kChannels);
  double sum = 0.0;
  long count = 0;
  while (count < 100000) {
    const ChannelSet c = sample_channels(cfg, rng);
    sum += c.H.squaredNorm() + c.G.squaredNorm() + c.F.squaredNorm();
    count += c.H.size() + c.G.size() + c.F.size();
  }
  EXPECT_NEAR(sum / count, 1.0, 0.03);
}

TEST(SampleEveChannels, ShapeDeterminismVariance) {
  const SystemConfig cfg = small(3, 4, 16, 4);
  Rng a(5, Stream::kEavesdropper);
  Rng b(5, Stream::kEavesdropper);
  const EveChannelSample x = sample_eve_channels(cfg, a);
  const EveChannelSample y = sample_eve_channels(cfg, b);
  EXPECT_EQ(x.h_e, y.h_e);
  EXPECT_EQ(x.G_e, y.G_e);
  EXPECT_EQ(x.h_e.rows(), 4);
  EXPECT_EQ(x.h_e.cols(), 3);
  EXPECT_EQ(x.G_e.rows(), 4);
  EXPECT_EQ(x.G_e.cols(), 16);
  double sum = 0.0;
  long count = 0;
  while (count < 100000) {
    const auto s = sample_eve_channels(cfg, a);
    sum += s.h_e.squaredNorm() + s.G_e.squaredNorm();
    count += s.h_e.size() + s.G_e.size();
  }
  EXPECT_NEAR(sum / count, 1.0, 0.03);
}

TEST(EffectiveChannel, NoReflectionWhenFIsZero) {
  const SystemConfig cfg = small();
  Rng rng(1, Stream::kChannels);
  ChannelSet chs = sample_channels(cfg, rng);
  chs.F.col(1).setZero();
  Rng opt(1, Stream::kOptimizer);
  const PhaseShift phi = PhaseShift::random(cfg.irs_elements, opt);
  EXPECT_LE((effective_channel(chs, phi, 1) - chs.h(1)).norm(), 1e-15);
}

TEST(EffectiveChannel, IdentityReflectorPassesF) {
  const SystemConfig cfg = small(1, 4, 4);
  Rng rng(2, Stream::kChannels);
  ChannelSet chs = sample_channels(cfg, rng);
  chs.G = CMatrix::Identity(4, 4);
  chs.H.setZero();
  EXPECT_LE((effective_channel(chs, PhaseShift::identity(4), 0) - chs.f(0)).norm(), 1e-15);
}

TEST(EffectiveChannel, MatchesCascadedForm) {
  const SystemConfig cfg = small(3, 5, 7);
  Rng rng(3, Stream::kChannels);
  const ChannelSet chs = sample_channels(cfg, rng);
  Rng opt(3, Stream::kOptimizer);
  for (int trial = 0; trial < 10; ++trial) {
    const PhaseShift phi = PhaseShift::random(cfg.irs_elements, opt);
    for (int k = 0; k < 3; ++k) {
      const CVector direct = effective_channel(chs, phi, k);
      const CVector cascaded = chs.h(k) + cascaded_channel(chs, k) * phi.diagonal();
      EXPECT_LE((direct - cascaded).norm(), 1e-12 * direct.norm());
    }
  }
}

TEST(EffectiveChannel, IndexOutOfRange) {
  const SystemConfig cfg = small();
  Rng rng(4, Stream::kChannels);
  const ChannelSet chs = sample_channels(cfg, rng);
  const PhaseShift phi = PhaseShift::identity(cfg.irs_elements);
  for (int bad : {-1, 2}) {
    try {
      effective_channel(chs, phi, bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
    }
    EXPECT_THROW(interference_matrix(chs, phi, bad), Error);
  }
  EXPECT_THROW(effective_channel(chs, PhaseShift::identity(3), 0), Error);
}

TEST(InterferenceMatrix, SingleUserIsEmpty) {
  const SystemConfig cfg = small(1);
  Rng rng(5, Stream::kChannels);
  const ChannelSet chs = sample_channels(cfg, rng);
  const CMatrix K = interference_matrix(chs, PhaseShift::identity(cfg.irs_elements), 0);
  EXPECT_EQ(K.rows(), 4);
  EXPECT_EQ(K.cols(), 0);
}

TEST(InterferenceMatrix, ColumnsAreOtherUsersInOrder) {
  const SystemConfig cfg = small(3);
  Rng rng(6, Stream::kChannels);
  const ChannelSet chs = sample_channels(cfg, rng);
  Rng opt(6, Stream::kOptimizer);
  const PhaseShift phi = PhaseShift::random(cfg.irs_elements, opt);
  const CMatrix K = interference_matrix(chs, phi, 1);
  ASSERT_EQ(K.cols(), 2);
  EXPECT_LE((K.col(0) - effective_channel(chs, phi, 0)).norm(), 1e-14);
  EXPECT_LE((K.col(1) - effective_channel(chs, phi, 2)).norm(), 1e-14);
}

TEST(PhaseShift, UnitModulusPreservesNormAndIsLinear) {
  const SystemConfig cfg = small(2, 4, 16);
  Rng rng(7, Stream::kChannels);
  ChannelSet chs = sample_channels(cfg, rng);
  Rng opt(7, Stream::kOptimizer);
  for (int trial = 0; trial < 10; ++trial) {
    const PhaseShift phi = PhaseShift::random(cfg.irs_elements, opt);
    const CVector q = phi.diagonal();
    for (int n = 0; n < q.size(); ++n) ASSERT_NEAR(std::abs(q(n)), 1.0, 1e-15);
    EXPECT_NEAR(q.cwiseProduct(chs.f(0)).norm(), chs.f(0).norm(), 1e-12);
    for (int n = 0; n < phi.size(); ++n) {
      ASSERT_GE(phi.theta()(n), 0.0);
      ASSERT_LT(phi.theta()(n), 2.0 * std::numbers::pi);
    }
  }
  // h + G Phi (a f1 + b f2) - h = a (G Phi f1) + b (G Phi f2).
  const PhaseShift phi = PhaseShift::random(cfg.irs_elements, opt);
  const CVector f1 = chs.f(0);
  const CVector f2 = chs.f(1);
  const Complex a(0.3, -1.2);
  const Complex b(2.0, 0.5);
  const CVector g1 = effective_channel(chs, phi, 0) - chs.h(0);
  const CVector g2 = effective_channel(chs, phi, 1) - chs.h(0 + 1);
  chs.F.col(0) = a * f1 + b * f2;
  const CVector mixed = effective_channel(chs, phi, 0) - chs.h(0);
  EXPECT_LE((mixed - (a * g1 + b * g2)).norm(), 1e-12 * mixed.norm());
}

TEST(PhaseShift, FromComplexWrapsAngles) {
  CVector q(3);
  q << Complex(0, 2), Complex(-1, 0), Complex(0, 0);
  const PhaseShift phi = PhaseShift::from_complex(q);
  EXPECT_NEAR(phi.theta()(0), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(phi.theta()(1), std::numbers::pi, 1e-15);
  EXPECT_EQ(phi.theta()(2), 0.0);
  const PhaseShift wrapped((RVector(2) << -0.5, 7.0).finished());
  EXPECT_NEAR(wrapped.theta()(0), 2 * std::numbers::pi - 0.5, 1e-15);
  EXPECT_NEAR(wrapped.theta()(1), 7.0 - 2 * std::numbers::pi, 1e-15);
}

}  // namespace
}  // namespace irssop
