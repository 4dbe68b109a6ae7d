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
#include <vector>

#include "haarforge/errors.hpp"
#include "haarforge/random.hpp"
#include "haarforge/stats.hpp"

using namespace haarforge;

TEST_CASE("KS critical coefficient") {
  CHECK(ks_critical_coefficient(0.05) == doctest::Approx(1.35810).epsilon(1e-5));
  CHECK(ks_critical_coefficient(0.001) == doctest::Approx(1.94947).epsilon(1e-5));
  CHECK_THROWS_AS(ks_critical_coefficient(0.0), DomainError);
}

TEST_CASE("KS statistic on a hand-checked sample") {
  // Points i/n + 1/(2n) against U(0,1) give D = 1/(2n).
  std::vector<double> v(100);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (i + 0.5) / 100.0;
  const TestReport r = ks_test(v, [](double x) { return x; });
  CHECK(r.statistic == doctest::Approx(0.005));
  CHECK(r.pass);
  CHECK(r.critical == doctest::Approx(ks_critical_coefficient(kDefaultLevel) / 10.0));
  CHECK_THROWS_AS(ks_test(std::vector<double>(49, 0.5), [](double x) { return x; }), DomainError);
}

TEST_CASE("KS detects a shifted law") {
  RandomStream s(61);
  std::vector<double> a(2000), b(2000);
  for (auto& x : a) x = s.gaussian();
  for (auto& x : b) x = s.gaussian() + 0.5;
  CHECK_FALSE(ks_two_sample(a, b).pass);
  for (auto& x : b) x = s.gaussian();
  CHECK(ks_two_sample(a, b).pass);
}

TEST_CASE("chi-square statistic and degrees of freedom") {
  const std::vector<double> obs = {10, 20, 30}, expct = {20, 20, 20};
  const TestReport r = chi_square(obs, expct);
  CHECK(r.statistic == doctest::Approx(10.0));
  // 2 degrees of freedom at 0.001: -2 ln(0.001).
  CHECK(r.critical == doctest::Approx(-2 * std::log(0.001)).epsilon(1e-9));
  CHECK(r.pass);
  CHECK_THROWS_AS(chi_square(obs, std::vector<double>{20, 20, 4}), DomainError);
  CHECK_THROWS_AS(chi_square(obs, std::vector<double>{20, 20}), DimensionError);
}

TEST_CASE("two-sample chi-square equals Pearson for equal sizes") {
  // With m = n the statistic reduces to sum (a - b)^2 / (a + b).
  const std::vector<double> a = {30, 50, 20}, b = {40, 40, 20};
  const TestReport r = chi_square_two_sample(a, b);
  CHECK(r.statistic == doctest::Approx(100.0 / 70 + 100.0 / 90));
}

TEST_CASE("mean estimate and z test") {
  const std::vector<double> v = {1, 2, 3, 4};
  const MeanEstimate m = mean_estimate(v);
  CHECK(m.mean == 2.5);
  CHECK(m.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(moment_z(2.5, 0.0, 2.5, 4).pass);
  CHECK_FALSE(moment_z(2.5, 0.0, 2.6, 4).pass);
  CHECK(moment_z(2.5, 0.1, 2.9, 4).pass);
  CHECK_FALSE(moment_z(2.5, 0.1, 3.1, 4).pass);
}
