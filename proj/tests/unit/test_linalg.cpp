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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "haarforge/errors.hpp"
#include "haarforge/matrix.hpp"
#include "haarforge/random.hpp"
#include "haarforge/samplers.hpp"
#include "oracles.hpp"

using namespace haarforge;

namespace {

SquareMatrix random_complex(RandomStream& s, std::size_t n) {
  std::vector<Complex> v(n * n);
  for (auto& z : v) z = Complex(s.gaussian(), s.gaussian());
  return SquareMatrix::from_complex(v);
}

double phase_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * std::numbers::pi);
  return std::min(d, 2.0 * std::numbers::pi - d);
}

}  // namespace

TEST_CASE("multiply agrees with the triple loop") {
  RandomStream s(11);
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    const SquareMatrix a = random_complex(s, n), b = random_complex(s, n);
    CHECK(oracle::max_diff(oracle::dense(multiply(a, b)), oracle::multiply(oracle::dense(a), oracle::dense(b))) <
          1e-12);
  }
  CHECK_THROWS_AS(multiply(SquareMatrix::identity(2), SquareMatrix::identity(3)), DimensionError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  RandomStream s(12);
  for (std::size_t n = 1; n <= 6; ++n) {
    const SquareMatrix a = random_complex(s, n);
    const Complex ref = oracle::cofactor_det(oracle::dense(a));
    CHECK(std::abs(determinant(a) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("charpoly_eval is det(lambda I - m)") {
  RandomStream s(13);
  const SquareMatrix a = random_complex(s, 4);
  for (Complex lambda : {Complex(0.3, -1.2), Complex(2.0, 0.0), Complex(0.0, 0.0)}) {
    auto d = oracle::dense(a);
    for (std::size_t i = 0; i < 4; ++i) {
      for (auto& z : d[i]) z = -z;
      d[i][i] += lambda;
    }
    const Complex ref = oracle::cofactor_det(d);
    CHECK(std::abs(charpoly_eval(a, lambda) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("real matrices reject complex writes") {
  SquareMatrix m = SquareMatrix::zeros(2);
  CHECK_NOTHROW(m.set(0, 1, Complex(2.0, 0.0)));
  CHECK_THROWS_AS(m.set(0, 1, Complex(0.0, 1.0)), DomainError);
  m.promote_to_complex();
  CHECK_NOTHROW(m.set(0, 1, Complex(0.0, 1.0)));
  const std::vector<double> bad = {1, 2, 3};
  CHECK_THROWS_AS(SquareMatrix::from_real(bad), DimensionError);
}

TEST_CASE("transpose and adjoint") {
  RandomStream s(14);
  const SquareMatrix a = random_complex(s, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(a.transpose()(i, j) == a(j, i));
      CHECK(a.adjoint()(i, j) == std::conj(a(j, i)));
    }
}

TEST_CASE("quaternion structure") {
  const SquareMatrix z = quaternion_structure(2);
  CHECK(z(0, 1) == Complex(-1.0));
  CHECK(z(1, 0) == Complex(1.0));
  CHECK(z(2, 3) == Complex(-1.0));
  CHECK(z(0, 2) == Complex(0.0));
  CHECK(symplectic_residual(SquareMatrix::identity(4)) == 0.0);
  CHECK(adjoint_residual(z) < 1e-15);
}

TEST_CASE("eigenphases of a permuted diagonal unitary") {
  const std::vector<double> truth = {0.0, 0.4, 1.9, 1.9, 3.5, 6.0};
  const std::size_t n = truth.size();
  SquareMatrix d(n, MatrixKind::complex);
  for (std::size_t i = 0; i < n; ++i) d.set(i, i, std::polar(1.0, truth[i]));
  RandomStream s(15);
  const SquareMatrix q = haar_householder(s, GroupId{Group::u, n});
  const EigenPhaseList got = eigenphases(multiply(multiply(q, d), q.adjoint()));
  REQUIRE(got.dim() == n);
  CHECK(std::is_sorted(got.phases.begin(), got.phases.end()));
  for (std::size_t i = 0; i < n; ++i) CHECK(phase_distance(got.phases[i], truth[i]) < 1e-9);
}

TEST_CASE("eigenphases of a rotation are +-theta") {
  const double theta = 0.7;
  const auto g = oracle::givens(2, 1, theta);
  SquareMatrix r(2, MatrixKind::real);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.set(i, j, g[i][j]);
  const EigenPhaseList got = eigenphases(r);
  CHECK(got.phases[0] == doctest::Approx(theta).epsilon(1e-12));
  CHECK(got.phases[1] == doctest::Approx(2.0 * std::numbers::pi - theta).epsilon(1e-12));
}

TEST_CASE("eigenphases: degenerate inputs and preconditions") {
  const EigenPhaseList id = eigenphases(SquareMatrix::identity(5));
  for (double p : id.phases) CHECK(p == 0.0);
  SquareMatrix minus = SquareMatrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) minus.set(i, i, -1.0);
  for (double p : eigenphases(minus).phases) CHECK(p == doctest::Approx(std::numbers::pi));
  SquareMatrix scaled = SquareMatrix::identity(2);
  scaled.set(0, 0, 2.0);
  CHECK_THROWS_AS(eigenphases(scaled), PreconditionError);
}

TEST_CASE("property: eigenphases are roots of the characteristic polynomial") {
  RandomStream s(16);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (Group g : {Group::so, Group::u}) {
      if (g == Group::so && n < 2) continue;
      const SquareMatrix x = sample_group(s, GroupId{g, n}, Method::euler);
      const EigenPhaseList ph = eigenphases(x);
      REQUIRE(ph.dim() == n);
      Complex prod = 1.0;
      for (double p : ph.phases) {
        CHECK(p >= 0.0);
        CHECK(p < 2.0 * std::numbers::pi);
        CHECK(std::abs(charpoly_eval(x, std::polar(1.0, p))) < 1e-8);
        prod *= std::polar(1.0, p);
      }
      CHECK(std::abs(prod - determinant(x)) < 1e-9);
    }
  }
}
