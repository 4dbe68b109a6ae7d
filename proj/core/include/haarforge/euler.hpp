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

#include <array>
#include <cstddef>
#include <vector>

#include "haarforge/matrix.hpp"

namespace haarforge {

/// Packed position of the pair (j, k), 1 <= j < k, in k-major order.
constexpr std::size_t pair_index(std::size_t j, std::size_t k) noexcept {
  return (k - 1) * (k - 2) / 2 + (j - 1);
}

/// theta_{j,k}, 1 <= j < k <= N. theta_{1,k} in [0, 2pi); theta_{j,k} in
/// [0, pi] for j >= 2.
struct EulerAnglesSO {
  std::size_t n = 0;
  std::vector<double> theta;

  static EulerAnglesSO zeros(std::size_t n);
  double& at(std::size_t j, std::size_t k) { return theta[pair_index(j, k)]; }
  double at(std::size_t j, std::size_t k) const { return theta[pair_index(j, k)]; }
};

/// phi_{j,k} in [0, pi/2], psi_{j,k} in [0, 2pi), alpha_l in [0, 2pi).
///
/// Coset factor E_j = U_j(phi_{j,j+1}, psi_{j,j+1}, alpha_{j+1})
/// U_{j-1}(phi_{j-1,j+1}, psi_{j-1,j+1}, 0) ... U_1(phi_{1,j+1}, psi_{1,j+1}, 0)
/// and V = e^{i alpha_1} E_1 ... E_{N-1}. The phase alpha_{j+1} sits on the
/// factor that touches coordinate j+1, which makes the last row of E_j carry
/// an independent phase in every coordinate. N^2 parameters in total.
struct EulerAnglesU {
  std::size_t n = 0;
  std::vector<double> phi;
  std::vector<double> psi;
  std::vector<double> alpha;  // alpha[l-1] = alpha_l

  static EulerAnglesU zeros(std::size_t n);
  double& phi_at(std::size_t j, std::size_t k) { return phi[pair_index(j, k)]; }
  double phi_at(std::size_t j, std::size_t k) const { return phi[pair_index(j, k)]; }
  double& psi_at(std::size_t j, std::size_t k) { return psi[pair_index(j, k)]; }
  double psi_at(std::size_t j, std::size_t k) const { return psi[pair_index(j, k)]; }
};

/// Unit quaternion as the SU(2) block
/// [[cos(phi) e^{i alpha}, sin(phi) e^{i psi}], [-sin(phi) e^{-i psi}, cos(phi) e^{-i alpha}]].
struct QuaternionAngles {
  double phi = 0.0;
  double psi = 0.0;
  double alpha = 0.0;
};

/// rho_{j,k} in [0, pi/2] with quaternions Q_{j,k}; leading quaternions q_j.
///
/// V = diag(q_1, I) E_1 ... E_{N-1} with
/// E_j = B_j(rho_{j,j+1}, q_{j+1}, Q_{j,j+1}) B_{j-1}(rho_{j-1,j+1}, 1, Q_{j-1,j+1}) ... B_1(rho_{1,j+1}, 1, Q_{1,j+1}),
/// where B_l is quaternion_block embedded at quaternion coordinates (l, l+1).
struct EulerAnglesSp {
  std::size_t n = 0;
  std::vector<double> rho;
  std::vector<QuaternionAngles> big_q;
  std::vector<QuaternionAngles> q;  // q[j-1] = q_j

  static EulerAnglesSp zeros(std::size_t n);
  double& rho_at(std::size_t j, std::size_t k) { return rho[pair_index(j, k)]; }
  double rho_at(std::size_t j, std::size_t k) const { return rho[pair_index(j, k)]; }
  QuaternionAngles& q_at(std::size_t j, std::size_t k) { return big_q[pair_index(j, k)]; }
  const QuaternionAngles& q_at(std::size_t j, std::size_t k) const { return big_q[pair_index(j, k)]; }
};

/// Row-major SU(2) block of a unit quaternion.
std::array<Complex, 4> quaternion_su2(const QuaternionAngles& q) noexcept;

/// Identity except [[cos, sin], [-sin, cos]] at rows/cols (j, j+1), 1-based.
SquareMatrix rotation_R(std::size_t j, double theta, std::size_t n);

/// Identity except the SU(2) block of (phi, psi, alpha) at rows/cols (j, j+1).
SquareMatrix unitary_U(std::size_t j, double phi, double psi, double alpha, std::size_t n);

/// 4x4 block [[q c, Q s], [-Q^dagger s, Q^dagger q^dagger Q c]], c = cos(rho), s = sin(rho).
///
/// The lower-right entry equals q^dagger c whenever q and Q commute; the
/// conjugated form keeps the block unitary for arbitrary quaternions.
SquareMatrix quaternion_block(double rho, const QuaternionAngles& q, const QuaternionAngles& big_q);

SquareMatrix coset_E_so(const EulerAnglesSO& angles, std::size_t j);
SquareMatrix compose_so(const EulerAnglesSO& angles);
SquareMatrix coset_E_u(const EulerAnglesU& angles, std::size_t j);
SquareMatrix compose_u(const EulerAnglesU& angles);
SquareMatrix coset_E_sp(const EulerAnglesSp& angles, std::size_t j);
SquareMatrix compose_sp(const EulerAnglesSp& angles);

/// Inverse of compose_so on SO(N). Throws PreconditionError for complex,
/// non-orthogonal or det = -1 input. Degenerate blocks take theta in
/// {0, pi} with all lower angles of the block set to 0.
EulerAnglesSO extract_angles_so(const SquareMatrix& v);

/// Inverse of compose_u. alpha_1 = arg(det v)/N taken in [0, 2pi/N).
EulerAnglesU extract_angles_u(const SquareMatrix& v);

double density_so(const EulerAnglesSO& angles);
double density_u(const EulerAnglesU& angles);
double density_sp(const EulerAnglesSp& angles);

}  // namespace haarforge
