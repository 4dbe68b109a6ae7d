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
#include <utility>
#include <vector>

#include "haarforge/matrix.hpp"
#include "haarforge/random.hpp"

namespace haarforge {

/// Cosines c_i = cos(theta_{i,N}), i = 1..N-1, of the last coset factor
/// E_{N-1} = R_{N-1} ... R_1, with derived coefficients
///   alpha_{i-1} = (-1)^{i-1} c_i,  rho_{i-1} = sqrt(1 - alpha_{i-1}^2),
///   alpha_{-1} = -1,  alpha_{N-1} = (-1)^{N-1}.
class HessenbergCoeffs {
 public:
  /// Throws DomainError unless every |c_i| <= 1; cosines.size() = N - 1.
  explicit HessenbergCoeffs(std::vector<double> cosines);

  std::size_t dim() const noexcept { return c_.size() + 1; }
  /// c_i for 1 <= i <= N-1; c_0 = c_N = 1.
  double c(std::size_t i) const noexcept;
  /// alpha_i for -1 <= i <= N-1.
  double alpha(long i) const noexcept;
  /// rho_i for 0 <= i <= N-2.
  double rho(long i) const noexcept;
  const std::vector<double>& cosines() const noexcept { return c_; }

 private:
  std::vector<double> c_;
};

/// Hessenberg matrix evaluated from the closed form, with its agreement
/// against the rotation product R_{N-1}(acos c_{N-1}) ... R_1(acos c_1).
struct HessenbergEntries {
  SquareMatrix matrix;
  double discrepancy = 0.0;
  /// False when the closed form disagreed by more than 1e-12 and the
  /// rotation product was returned instead.
  bool closed_form = true;
};

/// Closed form: diagonal -alpha_{i-2} alpha_{i-1}, superdiagonal rho_{i-1},
/// and, for i > j (1-based), -alpha_{j-2} alpha_{i-1} prod_{l=j-1}^{i-2} rho_l.
HessenbergEntries hessenberg_entries(const HessenbergCoeffs& c);

/// theta_{1,N} uniform on [0, 2pi), theta_{j,N} from cos_theta_so(j).
std::vector<double> random_last_column_angles(RandomStream& s, std::size_t n);

/// E_{N-1} = R_{N-1}(theta_{N-1,N}) ... R_1(theta_{1,N}) with Haar angles.
SquareMatrix hessenberg_E(RandomStream& s, std::size_t n);

/// R_{order[0]}(theta[order[0]-1]) R_{order[1]}(...) ...; order is 1-based.
SquareMatrix rotation_product(const std::vector<double>& theta, const std::vector<std::size_t>& order);

/// chi_N(lambda) of the coupled recurrence started from chi_0 = chi~_0 = 1.
Complex charpoly_recurrence(const HessenbergCoeffs& c, Complex lambda);
/// (chi_k, chi~_k) for 0 <= k <= N.
std::pair<Complex, Complex> charpoly_recurrence_pair(const HessenbergCoeffs& c, Complex lambda, std::size_t k);

/// R_odd R_even with R_odd = R_1 R_3 ..., R_even = R_2 R_4 ...; five-diagonal.
SquareMatrix cmv_matrix(RandomStream& s, std::size_t n);
SquareMatrix cmv_from_angles(const std::vector<double>& theta);

enum class TraceForm {
  /// Y_1 Y_2 + ... + Y_{T-1} Y_T.
  series,
  /// Y_2 + Y_2 Y_3 + ... + Y_{T-1} Y_T + Y_T: equal in law to tr E_{T-1}.
  finite
};

/// Y_i = Z_i / |(Z_1, ..., Z_i)| for standard Gaussians Z_i.
double trace_series_so(RandomStream& s, std::size_t terms, TraceForm form = TraceForm::series);

/// Y_i ~ Bernoulli(1/i); returns Y_1 Y_2 + ... + Y_{T-1} Y_T.
unsigned trace_series_perm(RandomStream& s, std::size_t terms);

/// Drops one phase nearest to 0 (mod 2pi): the eigenvalue +1 that every
/// odd-dimensional rotation carries.
EigenPhaseList without_forced_unit(const EigenPhaseList& phases);

}  // namespace haarforge
