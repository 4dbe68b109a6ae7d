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

#include "haarforge/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "haarforge/errors.hpp"
#include "haarforge/euler.hpp"

namespace haarforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sign_power(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

HessenbergCoeffs::HessenbergCoeffs(std::vector<double> cosines) : c_(std::move(cosines)) {
  for (double v : c_) {
    if (!(std::abs(v) <= 1.0)) throw DomainError("HessenbergCoeffs: cosine outside [-1, 1]");
  }
}

double HessenbergCoeffs::c(std::size_t i) const noexcept {
  if (i == 0 || i >= dim()) return 1.0;
  return c_[i - 1];
}

double HessenbergCoeffs::alpha(long i) const noexcept {
  const long n = static_cast<long>(dim());
  if (i == -1) return -1.0;
  if (i == n - 1) return sign_power(n - 1);
  return sign_power(i) * c_[static_cast<std::size_t>(i)];
}

double HessenbergCoeffs::rho(long i) const noexcept {
  const double a = alpha(i);
  return std::sqrt(std::max(0.0, 1.0 - a * a));
}

HessenbergEntries hessenberg_entries(const HessenbergCoeffs& c) {
  const std::size_t n = c.dim();
  SquareMatrix closed(n, MatrixKind::real);
  for (std::size_t i = 1; i <= n; ++i) {
    const long li = static_cast<long>(i);
    closed.set(i - 1, i - 1, -c.alpha(li - 2) * c.alpha(li - 1));
    if (i < n) closed.set(i - 1, i, c.rho(li - 1));
    for (std::size_t j = 1; j < i; ++j) {
      const long lj = static_cast<long>(j);
      double v = -c.alpha(lj - 2) * c.alpha(li - 1);
      for (long l = lj - 1; l <= li - 2; ++l) v *= c.rho(l);
      closed.set(i - 1, j - 1, v);
    }
  }

  std::vector<double> theta(n - 1);
  for (std::size_t i = 1; i < n; ++i) theta[i - 1] = std::acos(c.c(i));
  std::vector<std::size_t> order(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) order[k] = n - 1 - k;
  SquareMatrix product = rotation_product(theta, order);

  HessenbergEntries out;
  out.discrepancy = max_abs_difference(closed, product);
  out.closed_form = out.discrepancy <= 1e-12;
  out.matrix = out.closed_form ? std::move(closed) : std::move(product);
  return out;
}

std::vector<double> random_last_column_angles(RandomStream& s, std::size_t n) {
  if (n < 2) throw DomainError("random_last_column_angles: dimension must be at least 2");
  std::vector<double> theta(n - 1);
  theta[0] = s.uniform(0.0, kTwoPi);
  for (std::size_t j = 2; j < n; ++j) theta[j - 1] = std::acos(s.cos_theta_so(static_cast<unsigned>(j)));
  return theta;
}

SquareMatrix rotation_product(const std::vector<double>& theta, const std::vector<std::size_t>& order) {
  const std::size_t n = theta.size() + 1;
  SquareMatrix v = SquareMatrix::identity(n, MatrixKind::real);
  auto e = v.mutable_entries();
  for (std::size_t l : order) {
    if (l < 1 || l >= n) throw DimensionError("rotation_product: factor index out of range");
    const double c = std::cos(theta[l - 1]), s = std::sin(theta[l - 1]);
    for (std::size_t r = 0; r < n; ++r) {
      const Complex a = e[r * n + l - 1];
      const Complex b = e[r * n + l];
      e[r * n + l - 1] = c * a - s * b;
      e[r * n + l] = s * a + c * b;
    }
  }
  return v;
}

SquareMatrix hessenberg_E(RandomStream& s, std::size_t n) {
  const std::vector<double> theta = random_last_column_angles(s, n);
  std::vector<std::size_t> order(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) order[k] = n - 1 - k;
  return rotation_product(theta, order);
}

std::pair<Complex, Complex> charpoly_recurrence_pair(const HessenbergCoeffs& c, Complex lambda, std::size_t k) {
  if (k > c.dim()) throw DimensionError("charpoly_recurrence_pair: k exceeds N");
  Complex chi = 1.0, chi_t = 1.0;
  for (std::size_t step = 1; step <= k; ++step) {
    const double a = c.alpha(static_cast<long>(step) - 1);
    const Complex next = lambda * chi - a * chi_t;
    const Complex next_t = chi_t - lambda * a * chi;
    chi = next;
    chi_t = next_t;
  }
  return {chi, chi_t};
}

Complex charpoly_recurrence(const HessenbergCoeffs& c, Complex lambda) {
  return charpoly_recurrence_pair(c, lambda, c.dim()).first;
}

SquareMatrix cmv_from_angles(const std::vector<double>& theta) {
  const std::size_t n = theta.size() + 1;
  std::vector<std::size_t> order;
  for (std::size_t l = 1; l < n; l += 2) order.push_back(l);
  for (std::size_t l = 2; l < n; l += 2) order.push_back(l);
  // Odd-indexed factors commute among themselves, as do even ones.
  return rotation_product(theta, order);
}

SquareMatrix cmv_matrix(RandomStream& s, std::size_t n) { return cmv_from_angles(random_last_column_angles(s, n)); }

double trace_series_so(RandomStream& s, std::size_t terms, TraceForm form) {
  if (terms < 2) throw DomainError("trace_series_so: terms must be at least 2");
  double sum_sq = 0.0;
  double prev = 0.0;
  double total = 0.0;
  for (std::size_t i = 1; i <= terms; ++i) {
    double z = 0.0;
    do {
      z = s.gaussian();
    } while (i == 1 && z == 0.0);
    sum_sq += z * z;
    const double y = z / std::sqrt(sum_sq);
    if (i >= 2) {
      if (form == TraceForm::series || i >= 3) total += prev * y;
      if (form == TraceForm::finite && i == 2) total += y;
    }
    prev = y;
  }
  if (form == TraceForm::finite) total += prev;
  return total;
}

unsigned trace_series_perm(RandomStream& s, std::size_t terms) {
  if (terms < 2) throw DomainError("trace_series_perm: terms must be at least 2");
  unsigned total = 0;
  bool prev = true;  // Y_1 = 1
  for (std::size_t i = 2; i <= terms; ++i) {
    const bool y = s.bernoulli(1.0 / static_cast<double>(i));
    if (prev && y) ++total;
    prev = y;
  }
  return total;
}

EigenPhaseList without_forced_unit(const EigenPhaseList& phases) {
  EigenPhaseList out = phases;
  if (out.phases.empty()) return out;
  auto distance = [](double p) { return std::min(p, kTwoPi - p); };
  const auto it = std::min_element(out.phases.begin(), out.phases.end(),
                                   [&](double a, double b) { return distance(a) < distance(b); });
  out.phases.erase(it);
  return out;
}

}  // namespace haarforge
