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
#include <vector>

#include "irssop/linalg.hpp"
#include "irssop/rng.hpp"

namespace irssop {

/// Dimensions, powers and rates of one IRS-assisted uplink.
///
/// Users are indexed from 0. Powers and noise variances are linear.
struct SystemConfig {
  int num_users = 4;      // K
  int bs_antennas = 10;   // Nt
  int irs_elements = 32;  // Ns
  int eve_antennas = 2;   // Ne
  std::vector<double> rho;   // per-user transmit power, length K
  double sigma2_b = 1.0;     // BS noise variance
  double sigma2_e = 1.0;     // eavesdropper noise variance
  std::vector<double> rate;  // per-user secrecy coding rate (bit/s/Hz)
  std::uint64_t seed = 1;

  /// Equal-power, equal-rate configuration with sigma2_b = sigma2_e = 1 and
  /// rho = 10^(snr_db / 10).
  static SystemConfig from_snr(int num_users, int bs_antennas, int irs_elements,
                               int eve_antennas, double snr_db, double rate,
                               std::uint64_t seed = 1);

  /// Throws kInvalidConfig when a dimension, power or rate is out of range.
  void validate() const;
};

/// Known channels of one realization. Column k of H is h_k, column k of F is
/// f_k.
struct ChannelSet {
  CMatrix H;  // Nt x K, user -> BS
  CMatrix G;  // Nt x Ns, IRS -> BS
  CMatrix F;  // Ns x K, user -> IRS

  int num_users() const { return static_cast<int>(H.cols()); }
  int bs_antennas() const { return static_cast<int>(H.rows()); }
  int irs_elements() const { return static_cast<int>(G.cols()); }

  CVector h(int k) const;
  CVector f(int k) const;

  /// Throws kDimensionMismatch unless the shapes agree with cfg.
  void check_against(const SystemConfig& cfg) const;
};

/// One draw of the eavesdropper's channels. Column k of h_e is h_{e,k}.
struct EveChannelSample {
  CMatrix h_e;  // Ne x K
  CMatrix G_e;  // Ne x Ns
};

/// Unit-modulus IRS configuration, stored as angles in [0, 2*pi).
class PhaseShift {
 public:
  PhaseShift() = default;
  explicit PhaseShift(RVector theta);

  /// All-zero angles (Phi = I).
  static PhaseShift identity(int irs_elements);
  static PhaseShift random(int irs_elements, Rng& rng);
  /// Angles of arbitrary nonzero complex entries; zero entries map to 0.
  static PhaseShift from_complex(const CVector& q);

  int size() const { return static_cast<int>(theta_.size()); }
  const RVector& theta() const { return theta_; }

  /// q = vec(Phi), entries exp(j theta_n).
  CVector diagonal() const;

 private:
  RVector theta_;
};

/// Per-user unit-norm receive vectors. Column k of \`vectors\` is w_k, so the
/// receive matrix W (rows w_k^H) is vectors.adjoint().
struct ReceiveMatrix {
  CMatrix vectors;  // Nt x K

  int num_users() const { return static_cast<int>(vectors.cols()); }
  CVector w(int k) const { return vectors.col(k); }
  CMatrix matrix() const { return vectors.adjoint(); }

  /// Throws kDomainError if any column deviates from unit norm by more than
  /// tol.
  void check_unit_norm(double tol = 1e-10) const;
};

/// H, G, F with i.i.d. CN(0, 1) entries. Draw order is H, G, F.
ChannelSet sample_channels(const SystemConfig& cfg, Rng& rng);

/// h_e, G_e with i.i.d. CN(0, 1) entries. Draw order is h_e, G_e.
EveChannelSample sample_eve_channels(const SystemConfig& cfg, Rng& rng);

/// h_k + G Phi f_k.
CVector effective_channel(const ChannelSet& chs, const PhaseShift& phi, int k);

/// All effective channels as columns of an Nt x K matrix.
CMatrix effective_channels(const ChannelSet& chs, const PhaseShift& phi);

/// Nt x (K-1) matrix of effective channels of every user except k, in
/// ascending user order. Nt x 0 when K = 1.
CMatrix interference_matrix(const ChannelSet& chs, const PhaseShift& phi, int k);

/// E_k = G diag(f_k), so that G Phi f_k = E_k q.
CMatrix cascaded_channel(const ChannelSet& chs, int k);

}  // namespace irssop
