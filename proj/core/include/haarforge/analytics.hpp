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
#include <utility>
#include <vector>

#include "haarforge/matrix.hpp"
#include "haarforge/random.hpp"
#include "haarforge/samplers.hpp"
#include "haarforge/stats.hpp"

namespace haarforge {

/// <|X_{NN}|^{2p}> over SO(N): Gamma(p+1/2) Gamma(N/2) / (Gamma(1/2) Gamma(p+N/2)).
double moment_single(double n, double p);

/// <|X_{NN}|^{2p} |X_{N-1,N-1}|^{2q}> over SO(N). Evaluated for any N >= 2;
/// see moment_joint_in_derivation_range.
double moment_joint(double n, double p, double q);

/// The four-angle derivation behind moment_joint needs N >= 4.
bool moment_joint_in_derivation_range(double n) noexcept;

/// T(alpha, beta) = int_0^pi |sin|^alpha |cos|^beta = Gamma((a+1)/2) Gamma((b+1)/2) / Gamma((a+b)/2 + 1).
double beta_integral_T(double alpha, double beta);

enum class VolumeTag { so, o, o_mod_o1, u, u_mod_u1, u_mod_o };

std::string_view to_string(VolumeTag t) noexcept;

/// Closed-form volumes in the metric of the Euler-angle densities.
/// u_mod_o uses 2^{N(N+3)/4} prod_{l=1}^{N} pi^{(l+1)/2} / Gamma((l+1)/2).
double volume(VolumeTag tag, std::size_t n);

/// A_{n-1}(R) = R^{n-1} 2 pi^{n/2} / Gamma(n/2), the area of the sphere in R^n.
double sphere_area(std::size_t n, double radius);

/// (vol SO(N) / vol SO(N-1), A_{N-1}(sqrt 2)).
std::pair<double, double> sphere_ratio_so(std::size_t n);
/// (vol U(N) / vol U(N-1), A_{2N-1}(sqrt 2) / sqrt 2).
std::pair<double, double> sphere_ratio_u(std::size_t n);

/// Gamma(N/2 + 1) / Gamma(3/2)^N: the COE integral divided by (2 pi)^N.
double coe_normalization(std::size_t n);
/// N! vol(U(N)/O(N)) / vol(O(N)/O(1)^N): the raw COE integral.
double coe_normalization_raw(std::size_t n);
/// (2 pi)^N N!: the raw CUE integral.
double cue_normalization(std::size_t n);

/// Adaptive Gauss-Kronrod on [a, b].
double integrate_1d(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

/// Nested adaptive quadrature over a box of dimension <= 4.
double integrate_box(const std::function<double(std::span<const double>)>& f,
                     const std::vector<std::pair<double, double>>& box, double tol = 1e-10);

/// Integral of density_so over the Euler ranges (N = 2, 3).
double quadrature_volume_so(std::size_t n);
/// Integral of density_u over the Euler ranges (N = 1, 2).
double quadrature_volume_u(std::size_t n);
/// Raw double integral of |e^{i t1} - e^{i t2}|^beta over [0, 2pi)^2, beta in {1, 2}.
double quadrature_circular_n2(int beta);

struct ReynoldsResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  bool exact = false;
};

using ReynoldsFn = std::function<double(const SquareMatrix&, std::span<const double>)>;

/// Monte Carlo group average (1/M) sum_k f(S_k, x) over Haar samples S_k
/// drawn with the default method of the group (euler, or bubble for S_N).
/// With exact_if_finite and group S_N, N <= 8, every permutation is
/// enumerated and the standard error is 0.
ReynoldsResult reynolds_average(const ReynoldsFn& f, const GroupId& group, RandomStream& s, std::size_t samples,
                                std::span<const double> x, bool exact_if_finite = false);

}  // namespace haarforge
