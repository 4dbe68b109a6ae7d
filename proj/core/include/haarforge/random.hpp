// Copyright 2026 The haar-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace haarforge {

/// Counter-based Philox4x32-10 stream.
///
/// The 64-bit seed is the Philox key; the 128-bit counter holds a 64-bit
/// block index in its low half and the stream id in its high half, so
/// sibling streams never overlap. Each block yields two 64-bit words.
/// Gaussians use the Marsaglia polar method; the second variate of each
/// accepted pair is cached and returned by the next call.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept;
  /// Uniform on (0, 1): zero is redrawn.
  double uniform_open01() noexcept;
  /// Uniform on [lo, hi); throws DomainError unless lo < hi.
  double uniform(double lo, double hi);
  double gaussian() noexcept;
  /// Bernoulli(p).
  bool bernoulli(double p) noexcept;

  /// g_{j+1} / |g| for j+1 fresh Gaussians; density ∝ (1-s^2)^{(j-2)/2}.
  double cos_theta_so(unsigned j);
  /// arcsin(xi^{1/(2j)}); density ∝ cos(phi) sin(phi)^{2j-1} on [0, pi/2].
  double phi_unitary(unsigned j);
  /// rho in [0, pi/2] with sin^2(rho) ~ Beta(2j, 2); density ∝ cos^3 sin^{4j-1}.
  double rho_symplectic(unsigned j);
  /// arcsin(sqrt(xi)); density ∝ sin(2 phi) on [0, pi/2].
  double sin2phi_quaternion() noexcept;

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int available_ = 0;
  std::optional<double> cached_gaussian_;
};

/// Philox4x32-10 block function, exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

}  // namespace haarforge
