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

#include "haarforge/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "haarforge/errors.hpp"
#include "haarforge/euler.hpp"

namespace haarforge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(sum lgamma(num) - sum lgamma(den)); arguments equal on both sides
// cancel exactly before any rounding happens.
double gamma_ratio(std::vector<double> num, std::vector<double> den) {
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  std::vector<double> n_left, d_left;
  std::set_difference(num.begin(), num.end(), den.begin(), den.end(), std::back_inserter(n_left));
  std::set_difference(den.begin(), den.end(), num.begin(), num.end(), std::back_inserter(d_left));
  double log_value = 0.0;
  for (double a : n_left) log_value += std::lgamma(a);
  for (double a : d_left) log_value -= std::lgamma(a);
  return std::exp(log_value);
}

// log prod_{k=1}^{n} pi^{k/2} / Gamma(k/2)
double log_half_product(std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double h = static_cast<double>(k) / 2.0;
    acc += h * std::log(kPi) - std::lgamma(h);
  }
  return acc;
}

double log_volume_so(std::size_t n) {
  const double dn = static_cast<double>(n);
  return -std::log(2.0) + dn * (dn + 3.0) / 4.0 * std::log(2.0) + log_half_product(n);
}

double log_volume_u(std::size_t n) {
  const double dn = static_cast<double>(n);
  double acc = dn * (dn + 1.0) / 2.0 * std::log(2.0);
  for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * std::log(kPi) - std::lgamma(static_cast<double>(k));
  return acc;
}

double log_volume_u_mod_o(std::size_t n) {
  const double dn = static_cast<double>(n);
  double acc = dn * (dn + 3.0) / 4.0 * std::log(2.0);
  for (std::size_t l = 1; l <= n; ++l) {
    const double h = (static_cast<double>(l) + 1.0) / 2.0;
    acc += h * std::log(kPi) - std::lgamma(h);
  }
  return acc;
}

void require_moment_args(double n, double p, const char* what) {
  if (!(n >= 2.0) || !(p >= 0.0)) throw DomainError(std::string(what) + ": requires N >= 2 and exponents >= 0");
}

}  // namespace

double moment_single(double n, double p) {
  require_moment_args(n, p, "moment_single");
  return gamma_ratio({p + 0.5, n / 2.0}, {0.5, p + n / 2.0});
}

double moment_joint(double n, double p, double q) {
  require_moment_args(n, p, "moment_joint");
  require_moment_args(n, q, "moment_joint");
  const double h = (n - 1.0) / 2.0;
  return gamma_ratio({p + 0.5, q + 0.5, h + p + q, n / 2.0, h}, {0.5, 0.5, h + p, h + q, p + q + n / 2.0});
}

bool moment_joint_in_derivation_range(double n) noexcept { return n >= 4.0; }

double beta_integral_T(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("beta_integral_T: requires alpha, beta > -1");
  return gamma_ratio({(alpha + 1.0) / 2.0, (beta + 1.0) / 2.0}, {(alpha + beta) / 2.0 + 1.0});
}

std::string_view to_string(VolumeTag t) noexcept {
  switch (t) {
    case VolumeTag::so: return "SO(N)";
    case VolumeTag::o: return "O(N)";
    case VolumeTag::o_mod_o1: return "O(N)/O(1)^N";
    case VolumeTag::u: return "U(N)";
    case VolumeTag::u_mod_u1: return "U(N)/U(1)^N";
    case VolumeTag::u_mod_o: return "U(N)/O(N)";
  }
  return "?";
}

double volume(VolumeTag tag, std::size_t n) {
  if (n == 0) throw DomainError("volume: N must be positive");
  const double dn = static_cast<double>(n);
  switch (tag) {
    case VolumeTag::so: return std::exp(log_volume_so(n));
    case VolumeTag::o: return std::exp(std::log(2.0) + log_volume_so(n));
    case VolumeTag::o_mod_o1: return std::exp(std::log(2.0) * (1.0 - dn) + log_volume_so(n));
    case VolumeTag::u: return std::exp(log_volume_u(n));
    case VolumeTag::u_mod_u1: return std::exp(log_volume_u(n) - dn * std::log(kTwoPi));
    case VolumeTag::u_mod_o: return std::exp(log_volume_u_mod_o(n));
  }
  throw DomainError("volume: unsupported tag");
}

double sphere_area(std::size_t n, double radius) {
  if (n == 0 || !(radius > 0.0)) throw DomainError("sphere_area: requires n >= 1 and radius > 0");
  const double h = static_cast<double>(n) / 2.0;
  return std::exp(static_cast<double>(n - 1) * std::log(radius) + std::log(2.0) + h * std::log(kPi) - std::lgamma(h));
}

std::pair<double, double> sphere_ratio_so(std::size_t n) {
  if (n < 2) throw DomainError("sphere_ratio_so: N must be at least 2");
  return {std::exp(log_volume_so(n) - log_volume_so(n - 1)), sphere_area(n, std::numbers::sqrt2)};
}

std::pair<double, double> sphere_ratio_u(std::size_t n) {
  if (n < 2) throw DomainError("sphere_ratio_u: N must be at least 2");
  return {std::exp(log_volume_u(n) - log_volume_u(n - 1)), sphere_area(2 * n, std::numbers::sqrt2) / std::numbers::sqrt2};
}

double coe_normalization(std::size_t n) {
  if (n == 0) throw DomainError("coe_normalization: N must be positive");
  const double dn = static_cast<double>(n);
  return std::exp(std::lgamma(dn / 2.0 + 1.0) - dn * std::lgamma(1.5));
}

double coe_normalization_raw(std::size_t n) {
  if (n == 0) throw DomainError("coe_normalization_raw: N must be positive");
  const double dn = static_cast<double>(n);
  const double log_o_mod = std::log(2.0) * (1.0 - dn) + log_volume_so(n);
  return std::exp(std::lgamma(dn + 1.0) + log_volume_u_mod_o(n) - log_o_mod);
}

double cue_normalization(std::size_t n) {
  if (n == 0) throw DomainError("cue_normalization: N must be positive");
  const double dn = static_cast<double>(n);
  return std::exp(dn * std::log(kTwoPi) + std::lgamma(dn + 1.0));
}

double integrate_1d(const std::function<double(double)>& f, double a, double b, double tol) {
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, tol, &error);
}

double integrate_box(const std::function<double(std::span<const double>)>& f,
                     const std::vector<std::pair<double, double>>& box, double tol) {
  if (box.empty() || box.size() > 4) throw DimensionError("integrate_box: dimension must be 1..4");
  std::vector<double> point(box.size());
  std::function<double(std::size_t)> level = [&](std::size_t d) -> double {
    return integrate_1d(
        [&, d](double x) {
          point[d] = x;
          return d + 1 == box.size() ? f(point) : level(d + 1);
        },
        box[d].first, box[d].second, tol);
  };
  return level(0);
}

double quadrature_volume_so(std::size_t n) {
  if (n < 2 || n > 3) throw DomainError("quadrature_volume_so: supported for N = 2, 3");
  std::vector<std::pair<double, double>> box;
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t j = 1; j < k; ++j) box.emplace_back(0.0, j == 1 ? kTwoPi : kPi);
  return integrate_box(
      [n](std::span<const double> x) {
        EulerAnglesSO a = EulerAnglesSO::zeros(n);
        std::copy(x.begin(), x.end(), a.theta.begin());
        return density_so(a);
      },
      box);
}

double quadrature_volume_u(std::size_t n) {
  if (n < 1 || n > 2) throw DomainError("quadrature_volume_u: supported for N = 1, 2");
  if (n == 1) {
    return integrate_box([](std::span<const double> x) {
      EulerAnglesU a = EulerAnglesU::zeros(1);
      a.alpha[0] = x[0];
      return density_u(a);
    }, {{0.0, kTwoPi}});
  }
  return integrate_box(
      [](std::span<const double> x) {
        EulerAnglesU a = EulerAnglesU::zeros(2);
        a.phi[0] = x[0];
        a.psi[0] = x[1];
        a.alpha[0] = x[2];
        a.alpha[1] = x[3];
        return density_u(a);
      },
      {{0.0, kPi / 2.0}, {0.0, kTwoPi}, {0.0, kTwoPi}, {0.0, kTwoPi}});
}

double quadrature_circular_n2(int beta) {
  if (beta != 1 && beta != 2) throw DomainError("quadrature_circular_n2: beta must be 1 or 2");
  auto kernel = [beta](double t1, double t2) {
    const double d = 2.0 * std::abs(std::sin((t1 - t2) / 2.0));
    return beta == 1 ? d : d * d;
  };
  // The beta = 1 kernel has a kink on the diagonal; split the inner range there.
  return integrate_1d(
      [&](double t1) {
        const auto inner = [&](double t2) { return kernel(t1, t2); };
        double acc = 0.0;
        if (t1 > 0.0) acc += integrate_1d(inner, 0.0, t1);
        if (t1 < kTwoPi) acc += integrate_1d(inner, t1, kTwoPi);
        return acc;
      },
      0.0, kTwoPi);
}

ReynoldsResult reynolds_average(const ReynoldsFn& f, const GroupId& group, RandomStream& s, std::size_t samples,
                                std::span<const double> x, bool exact_if_finite) {
  ReynoldsResult out;
  if (group.tag == Group::sn && exact_if_finite && group.n <= 8) {
    std::vector<std::size_t> sigma(group.n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{1});
    double sum = 0.0;
    std::size_t count = 0;
    do {
      SquareMatrix p(group.n, MatrixKind::real);
      for (std::size_t c = 0; c < group.n; ++c) p.set(sigma[c] - 1, c, 1.0);
      sum += f(p, x);
      ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out.mean = sum / static_cast<double>(count);
    out.samples = count;
    out.exact = true;
    return out;
  }
  if (samples < 2) throw DomainError("reynolds_average: needs at least 2 samples");
  const Method method = group.tag == Group::sn ? Method::bubble : Method::euler;
  std::vector<double> values(samples);
  for (auto& v : values) v = f(sample_group(s, group, method), x);
  const MeanEstimate est = mean_estimate(values);
  out.mean = est.mean;
  out.std_error = est.std_error;
  out.samples = samples;
  return out;
}

}  // namespace haarforge
