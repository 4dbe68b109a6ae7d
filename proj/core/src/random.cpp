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

#include "haarforge/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "haarforge/errors.hpp"

namespace haarforge {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

double chi_square_even(RandomStream& s, unsigned dof) {
  // Sum of squares of `dof` standard Gaussians.
  double acc = 0.0;
  for (unsigned i = 0; i < dof; ++i) {
    const double g = s.gaussian();
    acc += g * g;
  }
  return acc;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id) {}

void RandomStream::refill() noexcept {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                            static_cast<std::uint32_t>(seed_ >> 32)};
  const auto out = philox4x32_10(ctr, key);
  ++block_;
  buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
  buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
  available_ = 2;
}

std::uint64_t RandomStream::next_u64() noexcept {
  if (available_ == 0) refill();
  return buffer_[2 - available_--];
}

double RandomStream::uniform01() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open01() noexcept {
  double u = 0.0;
  while (u == 0.0) u = uniform01();
  return u;
}

double RandomStream::uniform(double lo, double hi) {
  if (!(lo < hi)) throw DomainError("uniform: requires lo < hi");
  const double v = lo + (hi - lo) * uniform01();
  return v < hi ? v : lo;
}

double RandomStream::gaussian() noexcept {
  if (cached_gaussian_) {
    const double g = *cached_gaussian_;
    cached_gaussian_.reset();
    return g;
  }
  double x = 0.0, y = 0.0, r2 = 0.0;
  do {
    x = 2.0 * uniform01() - 1.0;
    y = 2.0 * uniform01() - 1.0;
    r2 = x * x + y * y;
  } while (r2 >= 1.0 || r2 == 0.0);
  const double f = std::sqrt(-2.0 * std::log(r2) / r2);
  cached_gaussian_ = y * f;
  return x * f;
}

bool RandomStream::bernoulli(double p) noexcept { return uniform01() < p; }

double RandomStream::cos_theta_so(unsigned j) {
  if (j == 0) throw DomainError("cos_theta_so: j must be >= 1");
  for (;;) {
    double sum = 0.0;
    double last = 0.0;
    for (unsigned i = 0; i <= j; ++i) {
      last = gaussian();
      sum += last * last;
    }
    if (sum > 0.0) return std::clamp(last / std::sqrt(sum), -1.0, 1.0);
  }
}

double RandomStream::phi_unitary(unsigned j) {
  if (j == 0) throw DomainError("phi_unitary: j must be >= 1");
  const double xi = uniform_open01();
  return std::asin(std::pow(xi, 1.0 / (2.0 * j)));
}

double RandomStream::rho_symplectic(unsigned j) {
  if (j == 0) throw DomainError("rho_symplectic: j must be >= 1");
  // Beta(2j, 2) = X / (X + Y) with X ~ chi^2(4j), Y ~ chi^2(4).
  for (;;) {
    const double x = chi_square_even(*this, 4 * j);
    const double y = chi_square_even(*this, 4);
    if (x + y > 0.0) {
      const double u = std::clamp(x / (x + y), 0.0, 1.0);
      return std::clamp(std::asin(std::sqrt(u)), 0.0, std::numbers::pi / 2.0);
    }
  }
}

double RandomStream::sin2phi_quaternion() noexcept { return std::asin(std::sqrt(uniform01())); }

}  // namespace haarforge
