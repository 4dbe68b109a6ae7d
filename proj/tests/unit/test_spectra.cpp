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
#include "haarforge/spectra.hpp"
#include "haarforge/stats.hpp"
#include "oracles.hpp"

using namespace haarforge;

namespace {

std::vector<double> cosines_of(const std::vector<double>& theta) {
  std::vector<double> c;
  for (double t : theta) c.push_back(std::cos(t));
  return c;
}

}  // namespace

TEST_CASE("HessenbergCoeffs boundary values") {
  const HessenbergCoeffs c({0.2, -0.5, 0.9});
  CHECK(c.dim() == 4);
  CHECK(c.c(0) == 1.0);
  CHECK(c.c(4) == 1.0);
  CHECK(c.alpha(-1) == -1.0);
  CHECK(c.alpha(3) == -1.0);
  CHECK(c.alpha(0) == 0.2);
  CHECK(c.alpha(1) == 0.5);
  CHECK(c.rho(0) == doctest::Approx(std::sqrt(1 - 0.04)));
  CHECK_THROWS_AS(HessenbergCoeffs({1.5}), DomainError);
}

TEST_CASE("property: closed-form Hessenberg entries match the rotation product") {
  RandomStream s(41);
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const std::vector<double> theta = random_last_column_angles(s, n);
      const HessenbergEntries h = hessenberg_entries(HessenbergCoeffs(cosines_of(theta)));
      CHECK(h.closed_form);
      CHECK(h.discrepancy <= 1e-12);
      // The closed form sees only cosines, so angles are read back through acos.
      oracle::Dense ref = oracle::identity(n);
      for (std::size_t l = n - 1; l >= 1; --l) ref = oracle::multiply(ref, oracle::givens(n, l, std::acos(std::cos(theta[l - 1]))));
      CHECK(oracle::max_diff(oracle::dense(h.matrix), ref) < 1e-12);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = r + 2; col < n; ++col) CHECK(h.matrix(r, col) == Complex(0.0));
    }
  }
}

TEST_CASE("CMV at N = 3 equals R_1 R_2 entry by entry") {
  const double a = 0.7, b = 2.1;
  const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
  const double expect[3][3] = {{ca, sa * cb, sa * sb}, {-sa, ca * cb, ca * sb}, {0.0, -sb, cb}};
  const SquareMatrix m = cmv_from_angles({a, b});
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(m(r, c).real() == doctest::Approx(expect[r][c]).epsilon(1e-15));
}

TEST_CASE("property: CMV matrices are orthogonal and five-diagonal") {
  RandomStream s(42);
  for (std::size_t n = 2; n <= 10; ++n) {
    const SquareMatrix m = cmv_matrix(s, n);
    CHECK(adjoint_residual(m) < 1e-13);
    CHECK(std::abs(determinant(m) - 1.0) < 1e-12);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((r > c ? r - c : c - r) > 2) CHECK(m(r, c) == Complex(0.0));
  }
}

TEST_CASE("property: coupled recurrence reproduces det(lambda I - E)") {
  RandomStream s(43);
  for (std::size_t n = 1; n <= 10; ++n) {
    const std::vector<double> theta = n >= 2 ? random_last_column_angles(s, n) : std::vector<double>{};
    std::vector<std::size_t> order;
    for (std::size_t l = n - 1; l >= 1; --l) order.push_back(l);
    const SquareMatrix e = n >= 2 ? rotation_product(theta, order) : SquareMatrix::identity(1);
    const HessenbergCoeffs c(cosines_of(theta));
    for (int k = 0; k < 5; ++k) {
      const Complex lambda(s.uniform(-1.5, 1.5), s.uniform(-1.5, 1.5));
      const Complex ref = oracle::cofactor_det([&] {
        auto d = oracle::dense(e);
        for (std::size_t i = 0; i < n; ++i) {
          for (auto& z : d[i]) z = -z;
          d[i][i] += lambda;
        }
        return d;
      }());
      CHECK(std::abs(charpoly_recurrence(c, lambda) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("charpoly_recurrence_pair starts at (1, 1)") {
  const HessenbergCoeffs c({0.3, 0.1});
  const auto p0 = charpoly_recurrence_pair(c, Complex(0.5, 0.5), 0);
  CHECK(p0.first == Complex(1.0));
  CHECK(p0.second == Complex(1.0));
  CHECK_THROWS_AS(charpoly_recurrence_pair(c, 1.0, 4), DimensionError);
}

TEST_CASE("trace series of permutations: mean 1 - 1/T") {
  // E[Y_i Y_{i+1}] = 1/(i(i+1)) telescopes to 1 - 1/T.
  RandomStream s(44);
  const std::size_t terms = 12;
  std::vector<double> v(40000);
  for (auto& x : v) x = trace_series_perm(s, terms);
  const MeanEstimate m = mean_estimate(v);
  CHECK(moment_z(m.mean, m.std_error, 1.0 - 1.0 / terms, v.size()).pass);
}

TEST_CASE("finite trace form matches tr E_{T-1} in law") {
  RandomStream s(45);
  const std::size_t t = 6;
  std::vector<double> series(4000), traces(4000);
  for (auto& x : series) x = trace_series_so(s, t, TraceForm::finite);
  for (auto& x : traces) {
    const SquareMatrix e = hessenberg_E(s, t);
    x = 0.0;
    for (std::size_t i = 0; i < t; ++i) x += e(i, i).real();
  }
  CHECK(ks_two_sample(series, traces).pass);
}

TEST_CASE("without_forced_unit drops the phase nearest zero") {
  const EigenPhaseList in{{0.5, 1.0, 6.2831}};
  const EigenPhaseList out = without_forced_unit(in);
  REQUIRE(out.dim() == 2);
  CHECK(out.phases[0] == 0.5);
  CHECK(out.phases[1] == 1.0);
  CHECK(without_forced_unit(EigenPhaseList{}).dim() == 0);
}
