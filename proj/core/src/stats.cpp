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

#include "haarforge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "haarforge/errors.hpp"

namespace haarforge {

namespace {

void check_level(double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("statistical level must lie in (0, 1)");
}

double chi_square_critical(double level, double dof) {
  const boost::math::chi_squared dist(dof);
  return boost::math::quantile(boost::math::complement(dist, level));
}

}  // namespace

std::string_view to_string(TestMethod m) noexcept {
  switch (m) {
    case TestMethod::ks: return "KS";
    case TestMethod::chi_square: return "chi-square";
    case TestMethod::moment_z: return "moment-z";
  }
  return "?";
}

MeanEstimate mean_estimate(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw DomainError("mean_estimate: needs at least 2 values");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double var = ss / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

double ks_critical_coefficient(double level) {
  check_level(level);
  return std::sqrt(-0.5 * std::log(level / 2.0));
}

TestReport ks_test(std::span<const double> samples, const std::function<double(double)>& cdf, double level) {
  const std::size_t n = samples.size();
  if (n < 50) throw DomainError("ks_test: needs at least 50 samples, got " + std::to_string(n));
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double dn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / dn - f, f - static_cast<double>(i) / dn});
  }
  TestReport r;
  r.statistic = d;
  r.critical = ks_critical_coefficient(level) / std::sqrt(dn);
  r.samples = n;
  r.pass = r.statistic <= r.critical;
  r.method = TestMethod::ks;
  return r;
}

TestReport ks_two_sample(std::span<const double> a, std::span<const double> b, double level) {
  if (a.size() < 100 || b.size() < 100) throw DomainError("ks_two_sample: needs at least 100 samples per side");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double n = static_cast<double>(x.size()), m = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  TestReport r;
  r.statistic = d;
  r.critical = ks_critical_coefficient(level) * std::sqrt((n + m) / (n * m));
  r.samples = x.size() + y.size();
  r.pass = r.statistic <= r.critical;
  r.method = TestMethod::ks;
  return r;
}

TestReport chi_square(std::span<const double> counts, std::span<const double> expected, double level,
                      std::size_t fitted) {
  check_level(level);
  if (counts.size() != expected.size()) throw DimensionError("chi_square: bin count mismatch");
  if (counts.size() < 2 + fitted) throw DomainError("chi_square: too few bins");
  double stat = 0.0, total = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (!(expected[k] >= 5.0)) throw DomainError("chi_square: expected count below 5 in bin " + std::to_string(k));
    const double diff = counts[k] - expected[k];
    stat += diff * diff / expected[k];
    total += counts[k];
  }
  TestReport r;
  r.statistic = stat;
  r.critical = chi_square_critical(level, static_cast<double>(counts.size() - 1 - fitted));
  r.samples = static_cast<std::size_t>(total);
  r.pass = r.statistic <= r.critical;
  r.method = TestMethod::chi_square;
  return r;
}

TestReport chi_square_two_sample(std::span<const double> a, std::span<const double> b, double level) {
  check_level(level);
  if (a.size() != b.size()) throw DimensionError("chi_square_two_sample: bin count mismatch");
  double na = 0.0, nb = 0.0;
  for (double v : a) na += v;
  for (double v : b) nb += v;
  if (na <= 0.0 || nb <= 0.0) throw DomainError("chi_square_two_sample: empty histogram");
  const double ka = std::sqrt(nb / na), kb = std::sqrt(na / nb);
  double stat = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double s = a[k] + b[k];
    if (s == 0.0) continue;
    const double diff = ka * a[k] - kb * b[k];
    stat += diff * diff / s;
    ++used;
  }
  if (used < 2) throw DomainError("chi_square_two_sample: fewer than two occupied bins");
  TestReport r;
  r.statistic = stat;
  r.critical = chi_square_critical(level, static_cast<double>(used - 1));
  r.samples = static_cast<std::size_t>(na + nb);
  r.pass = r.statistic <= r.critical;
  r.method = TestMethod::chi_square;
  return r;
}

TestReport moment_z(double estimate, double std_error, double exact, std::size_t samples, double threshold) {
  TestReport r;
  const double diff = std::abs(estimate - exact);
  if (std_error > 0.0) {
    r.statistic = diff / std_error;
  } else {
    r.statistic = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  r.critical = threshold;
  r.samples = samples;
  r.pass = r.statistic <= r.critical;
  r.method = TestMethod::moment_z;
  return r;
}

}  // namespace haarforge
