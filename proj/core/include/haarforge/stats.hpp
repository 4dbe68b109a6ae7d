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

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>

namespace haarforge {

inline constexpr double kDefaultLevel = 0.001;

enum class TestMethod { ks, chi_square, moment_z };

std::string_view to_string(TestMethod m) noexcept;

/// pass holds exactly when statistic <= critical.
struct TestReport {
  double statistic = 0.0;
  double critical = 0.0;
  std::size_t samples = 0;
  bool pass = false;
  TestMethod method = TestMethod::ks;
};

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Sample mean and its standard error s / sqrt(n); n >= 2.
MeanEstimate mean_estimate(std::span<const double> values);

/// Asymptotic Kolmogorov quantile c(level) = sqrt(-ln(level/2) / 2).
double ks_critical_coefficient(double level);

/// One-sample KS; at least 50 samples. Critical value c(level)/sqrt(n).
TestReport ks_test(std::span<const double> samples, const std::function<double(double)>& cdf,
                   double level = kDefaultLevel);

/// Two-sample KS; at least 100 samples each. Critical value
/// c(level) sqrt((n + m)/(n m)).
TestReport ks_two_sample(std::span<const double> a, std::span<const double> b, double level = kDefaultLevel);

/// Pearson goodness of fit with bins - 1 - fitted degrees of freedom.
/// Every expected count must be at least 5.
TestReport chi_square(std::span<const double> counts, std::span<const double> expected,
                      double level = kDefaultLevel, std::size_t fitted = 0);

/// Homogeneity of two histograms over the same bins; empty bins are skipped.
TestReport chi_square_two_sample(std::span<const double> a, std::span<const double> b,
                                 double level = kDefaultLevel);

/// |estimate - exact| / std_error against `threshold` standard errors. A
/// zero standard error passes only on exact agreement.
TestReport moment_z(double estimate, double std_error, double exact, std::size_t samples,
                    double threshold = 5.0);

}  // namespace haarforge
