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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "haarforge/errors.hpp"
#include "haarforge/euler.hpp"
#include "haarforge/random.hpp"
#include "haarforge/samplers.hpp"
#include "oracles.hpp"

using namespace haarforge;

namespace {

constexpr double kPi = std::numbers::pi;

// E_j = R_j(theta_{j,j+1}) R_{j-1}(theta_{j-1,j+1}) ... R_1(theta_{1,j+1}).
oracle::Dense oracle_coset_so(const EulerAnglesSO& a, std::size_t j) {
  oracle::Dense e = oracle::identity(a.n);
  for (std::size_t l = j; l >= 1; --l) e = oracle::multiply(e, oracle::givens(a.n, l, a.at(l, j + 1)));
  return e;
}

double angle_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2 * kPi);
  return std::min(d, 2 * kPi - d);
}

}  // namespace

TEST_CASE("pair_index enumerates pairs k-major") {
  std::size_t expect = 0;
  for (std::size_t k = 2; k <= 7; ++k)
    for (std::size_t j = 1; j < k; ++j) CHECK(pair_index(j, k) == expect++);
}

TEST_CASE("rotation_R layout") {
  const SquareMatrix r = rotation_R(2, 0.3, 4);
  CHECK(r(1, 1).real() == doctest::Approx(std::cos(0.3)));
  CHECK(r(1, 2).real() == doctest::Approx(std::sin(0.3)));
  CHECK(r(2, 1).real() == doctest::Approx(-std::sin(0.3)));
  CHECK(r(0, 0).real() == 1.0);
  CHECK_THROWS_AS(rotation_R(4, 0.3, 4), DimensionError);
  CHECK_THROWS_AS(rotation_R(0, 0.3, 4), DimensionError);
}

TEST_CASE("coset_E_so and compose_so agree with explicit Givens products") {
  RandomStream s(21);
  for (std::size_t n = 2; n <= 6; ++n) {
    const EulerAnglesSO a = random_angles_so(s, n);
    oracle::Dense v = oracle::identity(n);
    for (std::size_t j = 1; j < n; ++j) {
      const oracle::Dense e = oracle_coset_so(a, j);
      CHECK(oracle::max_diff(oracle::dense(coset_E_so(a, j)), e) < 1e-14);
      v = oracle::multiply(v, e);
    }
    CHECK(oracle::max_diff(oracle::dense(compose_so(a)), v) < 1e-13);
  }
}

TEST_CASE("last row of a coset: sign-corrected product formula") {
  // Row j+1 of E_j: t_l = (-1)^{j+1-l} prod_{m=l}^{j} sin(theta_m) cos(theta_{l-1}), cos(theta_0) = 1.
  RandomStream s(22);
  for (std::size_t n = 2; n <= 7; ++n) {
    const EulerAnglesSO a = random_angles_so(s, n);
    const std::size_t j = n - 1;
    const SquareMatrix e = coset_E_so(a, j);
    for (std::size_t l = 1; l <= j + 1; ++l) {
      double t = (j + 1 - l) % 2 == 0 ? 1.0 : -1.0;
      for (std::size_t m = l; m <= j; ++m) t *= std::sin(a.at(m, j + 1));
      if (l >= 2) t *= std::cos(a.at(l - 1, j + 1));
      CHECK(e(j, l - 1).real() == doctest::Approx(t).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("property: extract_angles_so inverts compose_so") {
  RandomStream s(23);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const EulerAnglesSO a = random_angles_so(s, n);
      const EulerAnglesSO b = extract_angles_so(compose_so(a));
      REQUIRE(b.theta.size() == a.theta.size());
      for (std::size_t k = 2; k <= n; ++k) {
        CHECK(b.at(1, k) >= 0.0);
        CHECK(b.at(1, k) < 2 * kPi);
        CHECK(angle_distance(a.at(1, k), b.at(1, k)) < 1e-8);
        for (std::size_t j = 2; j < k; ++j) {
          CHECK(b.at(j, k) >= 0.0);
          CHECK(b.at(j, k) <= kPi);
          CHECK(std::abs(a.at(j, k) - b.at(j, k)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("extract_angles_so on degenerate and invalid input") {
  const EulerAnglesSO id = extract_angles_so(SquareMatrix::identity(4));
  for (double t : id.theta) CHECK(t == 0.0);
  CHECK(max_abs_difference(compose_so(id), SquareMatrix::identity(4)) < 1e-15);

  SquareMatrix reflect = SquareMatrix::identity(3);
  reflect.set(0, 0, -1.0);
  CHECK_THROWS_AS(extract_angles_so(reflect), PreconditionError);
  SquareMatrix skew = SquareMatrix::identity(3);
  skew.set(0, 1, 0.1);
  CHECK_THROWS_AS(extract_angles_so(skew), PreconditionError);
  SquareMatrix phased = SquareMatrix::identity(2, MatrixKind::complex);
  phased.set(0, 0, Complex(0.0, 1.0));
  phased.set(1, 1, Complex(0.0, -1.0));
  CHECK_THROWS_AS(extract_angles_so(phased), PreconditionError);

  // Rotation by pi in the (2,3) plane hits a degenerate block.
  const SquareMatrix flip = rotation_R(2, kPi, 3);
  CHECK(max_abs_difference(compose_so(extract_angles_so(flip)), flip) < 1e-12);
}

TEST_CASE("property: compose_u is unitary and extract_angles_u inverts it") {
  RandomStream s(24);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const EulerAnglesU a = random_angles_u(s, n);
      const SquareMatrix v = compose_u(a);
      CHECK(adjoint_residual(v) < 1e-12);
      const EulerAnglesU b = extract_angles_u(v);
      CHECK(b.alpha[0] >= 0.0);
      CHECK(b.alpha[0] < 2 * kPi / static_cast<double>(n));
      CHECK(max_abs_difference(compose_u(b), v) < 1e-9);
    }
  }
}

TEST_CASE("unitary_U is the documented SU(2) block") {
  const SquareMatrix u = unitary_U(1, 0.4, 1.1, 2.3, 2);
  CHECK(std::abs(u(0, 0) - std::polar(std::cos(0.4), 2.3)) < 1e-15);
  CHECK(std::abs(u(0, 1) - std::polar(std::sin(0.4), 1.1)) < 1e-15);
  CHECK(std::abs(u(1, 0) + std::polar(std::sin(0.4), -1.1)) < 1e-15);
  CHECK(std::abs(u(1, 1) - std::polar(std::cos(0.4), -2.3)) < 1e-15);
  CHECK(std::abs(determinant(u) - 1.0) < 1e-15);
}

TEST_CASE("quaternion_block is unitary and symplectic") {
  RandomStream s(25);
  for (int rep = 0; rep < 50; ++rep) {
    const QuaternionAngles q{s.uniform(0, kPi / 2), s.uniform(0, 2 * kPi), s.uniform(0, 2 * kPi)};
    const QuaternionAngles big{s.uniform(0, kPi / 2), s.uniform(0, 2 * kPi), s.uniform(0, 2 * kPi)};
    const SquareMatrix b = quaternion_block(s.uniform(0, kPi / 2), q, big);
    CHECK(adjoint_residual(b) < 1e-13);
    CHECK(symplectic_residual(b) < 1e-13);
  }
  CHECK_THROWS_AS(quaternion_block(-0.1, {}, {}), DomainError);
  CHECK_THROWS_AS(quaternion_block(2.0, {}, {}), DomainError);
}

TEST_CASE("property: compose_sp lies in Sp(2N)") {
  RandomStream s(26);
  for (std::size_t n = 1; n <= 5; ++n) {
    const SquareMatrix v = compose_sp(random_angles_sp(s, n));
    CHECK(v.dim() == 2 * n);
    CHECK(adjoint_residual(v) < 1e-12);
    CHECK(symplectic_residual(v) < 1e-12);
  }
}

TEST_CASE("densities vanish exactly at range endpoints") {
  EulerAnglesSO a = EulerAnglesSO::zeros(4);
  for (double& t : a.theta) t = 1.0;
  CHECK(density_so(a) > 0.0);
  a.at(2, 3) = kPi;
  CHECK(density_so(a) == 0.0);
  a.at(2, 3) = 0.0;
  CHECK(density_so(a) == 0.0);

  EulerAnglesU u = EulerAnglesU::zeros(3);
  for (double& p : u.phi) p = 0.5;
  CHECK(density_u(u) > 0.0);
  u.phi_at(1, 2) = kPi / 2;
  CHECK(density_u(u) == 0.0);
  u.phi_at(1, 2) = 0.0;
  CHECK(density_u(u) == 0.0);
}

TEST_CASE("density_so of SO(2) is constant") {
  EulerAnglesSO a = EulerAnglesSO::zeros(2);
  a.at(1, 2) = 2.0;
  CHECK(density_so(a) == doctest::Approx(std::sqrt(2.0)));
}
