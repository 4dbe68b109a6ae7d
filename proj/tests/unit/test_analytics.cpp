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

#include "haarforge/analytics.hpp"
#include "haarforge/errors.hpp"

using namespace haarforge;

namespace {

constexpr double kPi = std::numbers::pi;

// Composite midpoint rule; the oracles below only need smooth integrands
// on intervals where the kinks sit at panel edges.
template <class F>
double midpoint(F f, double a, double b, std::size_t panels = 200000) {
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) sum += f(a + (static_cast<double>(i) + 0.5) * h);
  return sum * h;
}

// <|cos theta|^{2p}> with density sin^{N-2} on [0, pi]: the law of X_NN on SO(N).
double moment_oracle(double n, double p) {
  auto w = [n](double t) { return std::pow(std::sin(t), n - 2); };
  const double num = 2 * midpoint([&](double t) { return std::pow(std::cos(t), 2 * p) * w(t); }, 0, kPi / 2);
  const double den = 2 * midpoint(w, 0, kPi / 2);
  return num / den;
}

}  // namespace

TEST_CASE("moment_single agrees with direct integration") {
  for (double n : {2.0, 3.0, 5.0, 8.0})
    for (double p : {0.5, 1.0, 2.0, 3.0})
      CHECK(moment_single(n, p) == doctest::Approx(moment_oracle(n, p)).epsilon(1e-7));
  CHECK(moment_single(4, 0) == 1.0);
  CHECK_THROWS_AS(moment_single(1, 1), DomainError);
}

TEST_CASE("moment_joint: degree-four orthogonal moments") {
  // <x_11^2 x_22^2> over O(N) is (N+1) / (N (N-1) (N+2)).
  for (double n : {3.0, 4.0, 5.0, 6.0})
    CHECK(moment_joint(n, 1, 1) == doctest::Approx((n + 1) / (n * (n - 1) * (n + 2))).epsilon(1e-12));
  for (double n : {3.0, 6.0}) CHECK(moment_joint(n, 1.5, 0) == doctest::Approx(moment_single(n, 1.5)));
  CHECK_FALSE(moment_joint_in_derivation_range(3));
  CHECK(moment_joint_in_derivation_range(4));
}

TEST_CASE("beta_integral_T") {
  CHECK(beta_integral_T(0, 0) == doctest::Approx(kPi));
  CHECK(beta_integral_T(2, 0) == doctest::Approx(kPi / 2));
  CHECK(beta_integral_T(1, 0) == doctest::Approx(2.0));
  CHECK(beta_integral_T(3, 2) ==
        doctest::Approx(midpoint([](double t) { return std::pow(std::sin(t), 3) * std::pow(std::cos(t), 2); }, 0, kPi))
            .epsilon(1e-9));
}

TEST_CASE("volumes: low dimensions and sphere ratios") {
  CHECK(volume(VolumeTag::so, 2) == doctest::Approx(2 * std::sqrt(2.0) * kPi));
  CHECK(volume(VolumeTag::u, 1) == doctest::Approx(2 * kPi));
  for (std::size_t n = 2; n <= 20; ++n) {
    CHECK(volume(VolumeTag::o, n) == doctest::Approx(2 * volume(VolumeTag::so, n)));
    const auto so = sphere_ratio_so(n);
    CHECK(so.first == doctest::Approx(so.second).epsilon(1e-12));
    CHECK(so.second == doctest::Approx(sphere_area(n, std::sqrt(2.0))));
    const auto u = sphere_ratio_u(n);
    CHECK(u.first == doctest::Approx(u.second).epsilon(1e-12));
  }
  CHECK(sphere_area(3, 1.0) == doctest::Approx(4 * kPi));
  CHECK(sphere_area(2, 2.0) == doctest::Approx(4 * kPi));
  CHECK_THROWS_AS(volume(VolumeTag::so, 0), DomainError);
}

TEST_CASE("volumes agree with quadrature of the densities") {
  CHECK(quadrature_volume_so(2) == doctest::Approx(volume(VolumeTag::so, 2)).epsilon(1e-9));
  CHECK(quadrature_volume_so(3) == doctest::Approx(volume(VolumeTag::so, 3)).epsilon(1e-9));
  CHECK(quadrature_volume_u(1) == doctest::Approx(volume(VolumeTag::u, 1)).epsilon(1e-9));
  CHECK(quadrature_volume_u(2) == doctest::Approx(volume(VolumeTag::u, 2)).epsilon(1e-9));
}

TEST_CASE("circular ensemble normalizations at N = 2") {
  // int int |e^{i a} - e^{i b}| = 2 pi int_0^{2 pi} 2 sin(t/2) dt = 16 pi.
  CHECK(quadrature_circular_n2(1) == doctest::Approx(16 * kPi).epsilon(1e-9));
  CHECK(coe_normalization_raw(2) == doctest::Approx(16 * kPi).epsilon(1e-12));
  CHECK(coe_normalization(2) == doctest::Approx(4 / kPi).epsilon(1e-12));
  // int int |e^{i a} - e^{i b}|^2 = (2 pi)^2 * 2.
  CHECK(quadrature_circular_n2(2) == doctest::Approx(8 * kPi * kPi).epsilon(1e-9));
  CHECK(cue_normalization(2) == doctest::Approx(8 * kPi * kPi));
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(coe_normalization_raw(n) == doctest::Approx(coe_normalization(n) * std::pow(2 * kPi, n)).epsilon(1e-12));
}

TEST_CASE("quadrature helpers") {
  CHECK(integrate_1d([](double x) { return std::sin(x); }, 0, kPi) == doctest::Approx(2.0).epsilon(1e-12));
  const double v = integrate_box([](std::span<const double> x) { return x[0] * x[1] * x[2] * x[3]; },
                                 {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  CHECK(v == doctest::Approx(1.0 / 16).epsilon(1e-10));
  CHECK_THROWS_AS(integrate_box([](std::span<const double>) { return 1.0; }, {}), DimensionError);
}

TEST_CASE("reynolds_average: exact on S_N, Monte Carlo on SO(N)") {
  RandomStream s(51);
  const std::vector<double> x = {1.0, 2.0, 4.0};
  // (S x)_1 averages to the mean of x over any transitive group action.
  const ReynoldsFn first = [](const SquareMatrix& m, std::span<const double> v) {
    double acc = 0.0;
    for (std::size_t c = 0; c < v.size(); ++c) acc += m(0, c).real() * v[c];
    return acc;
  };
  const ReynoldsResult exact = reynolds_average(first, {Group::sn, 3}, s, 10, x, true);
  CHECK(exact.exact);
  CHECK(exact.samples == 6);
  CHECK(exact.std_error == 0.0);
  CHECK(exact.mean == doctest::Approx(7.0 / 3.0));
  // On SO(3), <(S x)_1^2> = |x|^2 / 3.
  const ReynoldsFn square = [&](const SquareMatrix& m, std::span<const double> v) {
    const double y = first(m, v);
    return y * y;
  };
  const ReynoldsResult mc = reynolds_average(square, {Group::so, 3}, s, 20000, x);
  CHECK_FALSE(mc.exact);
  CHECK(std::abs(mc.mean - 21.0 / 3.0) < 5 * mc.std_error);
}
