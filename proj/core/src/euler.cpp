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

#include "haarforge/euler.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "haarforge/errors.hpp"

namespace haarforge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegenerate = 1e-14;

using Block2 = std::array<Complex, 4>;

double wrap(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

// sin/cos that are exactly zero at the range endpoints used by the densities.
double exact_sin(double x) { return (x == 0.0 || x == kPi) ? 0.0 : std::sin(x); }
double exact_cos(double x) { return x == kPi / 2.0 ? 0.0 : std::cos(x); }

void check_factor_index(std::size_t j, std::size_t n, const char* what) {
  if (j < 1 || j + 1 > n) {
    throw DimensionError(std::string(what) + ": index " + std::to_string(j) + " outside [1, " +
                         std::to_string(n == 0 ? 0 : n - 1) + "]");
  }
}

// V <- V R_l(theta) for a real rotation at 1-based (l, l+1).
void right_rotate(SquareMatrix& v, std::size_t l, double c, double s) {
  const std::size_t n = v.dim();
  auto e = v.mutable_entries();
  const std::size_t a = l - 1, b = l;
  for (std::size_t r = 0; r < n; ++r) {
    const Complex va = e[r * n + a];
    const Complex vb = e[r * n + b];
    e[r * n + a] = c * va - s * vb;
    e[r * n + b] = s * va + c * vb;
  }
}

// V <- V B for a 2x2 block B at 0-based columns (a, a+1).
void right_apply2(SquareMatrix& v, std::size_t a, const Block2& blk) {
  const std::size_t n = v.dim();
  auto e = v.mutable_entries();
  for (std::size_t r = 0; r < n; ++r) {
    const Complex x = e[r * n + a];
    const Complex y = e[r * n + a + 1];
    e[r * n + a] = x * blk[0] + y * blk[2];
    e[r * n + a + 1] = x * blk[1] + y * blk[3];
  }
}

// V <- V B for a 4x4 block B at 0-based columns (a .. a+3).
void right_apply4(SquareMatrix& v, std::size_t a, const SquareMatrix& blk) {
  const std::size_t n = v.dim();
  auto e = v.mutable_entries();
  for (std::size_t r = 0; r < n; ++r) {
    Complex row[4];
    for (std::size_t k = 0; k < 4; ++k) row[k] = e[r * n + a + k];
    for (std::size_t c = 0; c < 4; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += row[k] * blk(k, c);
      e[r * n + a + c] = acc;
    }
  }
}

Block2 su2(double phi, double psi, double alpha) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c * std::polar(1.0, alpha), s * std::polar(1.0, psi), -s * std::polar(1.0, -psi),
          c * std::polar(1.0, -alpha)};
}

Block2 adjoint2(const Block2& b) {
  return {std::conj(b[0]), std::conj(b[2]), std::conj(b[1]), std::conj(b[3])};
}

Block2 mul2(const Block2& x, const Block2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

void require_same_n(std::size_t n, std::size_t count, std::size_t expected, const char* what) {
  if (n == 0 || count != expected) {
    throw DimensionError(std::string(what) + ": angle record does not match dimension " + std::to_string(n));
  }
}

void validate(const EulerAnglesSO& a) { require_same_n(a.n, a.theta.size(), a.n * (a.n - 1) / 2, "EulerAnglesSO"); }

void validate(const EulerAnglesU& a) {
  const std::size_t pairs = a.n * (a.n - 1) / 2;
  require_same_n(a.n, a.phi.size(), pairs, "EulerAnglesU");
  require_same_n(a.n, a.psi.size(), pairs, "EulerAnglesU");
  require_same_n(a.n, a.alpha.size(), a.n, "EulerAnglesU");
}

void validate(const EulerAnglesSp& a) {
  const std::size_t pairs = a.n * (a.n - 1) / 2;
  require_same_n(a.n, a.rho.size(), pairs, "EulerAnglesSp");
  require_same_n(a.n, a.big_q.size(), pairs, "EulerAnglesSp");
  require_same_n(a.n, a.q.size(), a.n, "EulerAnglesSp");
}

void apply_coset_so(SquareMatrix& v, const EulerAnglesSO& a, std::size_t j) {
  for (std::size_t l = j; l >= 1; --l) {
    const double t = a.at(l, j + 1);
    right_rotate(v, l, std::cos(t), std::sin(t));
  }
}

void apply_coset_u(SquareMatrix& v, const EulerAnglesU& a, std::size_t j) {
  for (std::size_t l = j; l >= 1; --l) {
    const double alpha = l == j ? a.alpha[j] : 0.0;
    right_apply2(v, l - 1, su2(a.phi_at(l, j + 1), a.psi_at(l, j + 1), alpha));
  }
}

void apply_coset_sp(SquareMatrix& v, const EulerAnglesSp& a, std::size_t j) {
  for (std::size_t l = j; l >= 1; --l) {
    const QuaternionAngles lead = l == j ? a.q[j] : QuaternionAngles{};
    right_apply4(v, 2 * (l - 1), quaternion_block(a.rho_at(l, j + 1), lead, a.q_at(l, j + 1)));
  }
}

}  // namespace

EulerAnglesSO EulerAnglesSO::zeros(std::size_t n) { return {n, std::vector<double>(n * (n - 1) / 2, 0.0)}; }

EulerAnglesU EulerAnglesU::zeros(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  return {n, std::vector<double>(pairs, 0.0), std::vector<double>(pairs, 0.0), std::vector<double>(n, 0.0)};
}

EulerAnglesSp EulerAnglesSp::zeros(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  return {n, std::vector<double>(pairs, 0.0), std::vector<QuaternionAngles>(pairs),
          std::vector<QuaternionAngles>(n)};
}

std::array<Complex, 4> quaternion_su2(const QuaternionAngles& q) noexcept { return su2(q.phi, q.psi, q.alpha); }

SquareMatrix rotation_R(std::size_t j, double theta, std::size_t n) {
  check_factor_index(j, n, "rotation_R");
  SquareMatrix r = SquareMatrix::identity(n, MatrixKind::real);
  const double c = std::cos(theta), s = std::sin(theta);
  r.set(j - 1, j - 1, c);
  r.set(j - 1, j, s);
  r.set(j, j - 1, -s);
  r.set(j, j, c);
  return r;
}

SquareMatrix unitary_U(std::size_t j, double phi, double psi, double alpha, std::size_t n) {
  check_factor_index(j, n, "unitary_U");
  SquareMatrix u = SquareMatrix::identity(n, MatrixKind::complex);
  const Block2 b = su2(phi, psi, alpha);
  u.set(j - 1, j - 1, b[0]);
  u.set(j - 1, j, b[1]);
  u.set(j, j - 1, b[2]);
  u.set(j, j, b[3]);
  return u;
}

SquareMatrix quaternion_block(double rho, const QuaternionAngles& q, const QuaternionAngles& big_q) {
  if (!(rho >= 0.0 && rho <= kPi / 2.0)) throw DomainError("quaternion_block: rho outside [0, pi/2]");
  const double c = std::cos(rho), s = std::sin(rho);
  const Block2 qb = quaternion_su2(q);
  const Block2 qq = quaternion_su2(big_q);
  const Block2 qq_adj = adjoint2(qq);
  const Block2 lower_right = mul2(mul2(qq_adj, adjoint2(qb)), qq);
  SquareMatrix m(4, MatrixKind::complex);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t col = 0; col < 2; ++col) {
      const std::size_t k = 2 * r + col;
      m.set(r, col, qb[k] * c);
      m.set(r, col + 2, qq[k] * s);
      m.set(r + 2, col, -qq_adj[k] * s);
      m.set(r + 2, col + 2, lower_right[k] * c);
    }
  }
  return m;
}

SquareMatrix coset_E_so(const EulerAnglesSO& angles, std::size_t j) {
  validate(angles);
  check_factor_index(j, angles.n, "coset_E_so");
  SquareMatrix v = SquareMatrix::identity(angles.n, MatrixKind::real);
  apply_coset_so(v, angles, j);
  return v;
}

SquareMatrix compose_so(const EulerAnglesSO& angles) {
  validate(angles);
  SquareMatrix v = SquareMatrix::identity(angles.n, MatrixKind::real);
  for (std::size_t j = 1; j < angles.n; ++j) apply_coset_so(v, angles, j);
  return v;
}

SquareMatrix coset_E_u(const EulerAnglesU& angles, std::size_t j) {
  validate(angles);
  check_factor_index(j, angles.n, "coset_E_u");
  SquareMatrix v = SquareMatrix::identity(angles.n, MatrixKind::complex);
  apply_coset_u(v, angles, j);
  return v;
}

SquareMatrix compose_u(const EulerAnglesU& angles) {
  validate(angles);
  SquareMatrix v = SquareMatrix::identity(angles.n, MatrixKind::complex);
  const Complex lead = std::polar(1.0, angles.alpha[0]);
  for (std::size_t i = 0; i < angles.n; ++i) v.set(i, i, lead);
  for (std::size_t j = 1; j < angles.n; ++j) apply_coset_u(v, angles, j);
  return v;
}

SquareMatrix coset_E_sp(const EulerAnglesSp& angles, std::size_t j) {
  validate(angles);
  check_factor_index(j, angles.n, "coset_E_sp");
  SquareMatrix v = SquareMatrix::identity(2 * angles.n, MatrixKind::complex);
  apply_coset_sp(v, angles, j);
  return v;
}

SquareMatrix compose_sp(const EulerAnglesSp& angles) {
  validate(angles);
  SquareMatrix v = SquareMatrix::identity(2 * angles.n, MatrixKind::complex);
  right_apply2(v, 0, quaternion_su2(angles.q[0]));
  for (std::size_t j = 1; j < angles.n; ++j) apply_coset_sp(v, angles, j);
  return v;
}

EulerAnglesSO extract_angles_so(const SquareMatrix& v) {
  const std::size_t n = v.dim();
  for (const Complex& x : v.entries()) {
    if (x.imag() != 0.0) throw PreconditionError("extract_angles_so: input has complex entries");
  }
  if (adjoint_residual(v) > 1e-10 * static_cast<double>(n)) {
    throw PreconditionError("extract_angles_so: input is not orthogonal");
  }
  const double det = determinant(v).real();
  if (std::abs(det + 1.0) <= 1e-8) throw PreconditionError("extract_angles_so: input is a reflection (det = -1)");
  if (std::abs(det - 1.0) > 1e-8) throw PreconditionError("extract_angles_so: determinant is not 1");

  EulerAnglesSO angles = EulerAnglesSO::zeros(n);
  SquareMatrix w = v;
  std::vector<double> t(n + 1), prefix(n + 1);
  for (std::size_t j = n - 1; j >= 1; --j) {
    // t_l = (-1)^{j+1-l} W_{j+1,l} = prod_{m=l}^{j} sin(theta_m) cos(theta_{l-1}).
    for (std::size_t l = 1; l <= j + 1; ++l) {
      const double r = w(j, l - 1).real();
      t[l] = ((j + 1 - l) % 2 == 0) ? r : -r;
    }
    prefix[0] = 0.0;
    for (std::size_t l = 1; l <= j + 1; ++l) prefix[l] = prefix[l - 1] + t[l] * t[l];

    bool degenerate = false;
    for (std::size_t l = j; l >= 2; --l) {
      const double norm = std::sqrt(prefix[l]);
      if (norm < kDegenerate) {
        angles.at(l, j + 1) = t[l + 1] >= 0.0 ? 0.0 : kPi;
        for (std::size_t m = 1; m < l; ++m) angles.at(m, j + 1) = 0.0;
        degenerate = true;
        break;
      }
      angles.at(l, j + 1) = std::atan2(norm, t[l + 1]);
    }
    if (!degenerate) angles.at(1, j + 1) = wrap(std::atan2(t[1], t[2]));

    // W <- W E_j^T = W R_1^T ... R_j^T.
    for (std::size_t l = 1; l <= j; ++l) {
      const double th = angles.at(l, j + 1);
      right_rotate(w, l, std::cos(th), -std::sin(th));
    }
    auto e = w.mutable_entries();
    for (auto& x : e) x = Complex(x.real(), 0.0);
  }
  return angles;
}

EulerAnglesU extract_angles_u(const SquareMatrix& v) {
  const std::size_t n = v.dim();
  if (adjoint_residual(v) > 1e-10 * static_cast<double>(n)) {
    throw PreconditionError("extract_angles_u: input is not unitary");
  }
  EulerAnglesU angles = EulerAnglesU::zeros(n);
  double det_arg = std::arg(determinant(v));
  if (det_arg < 0.0) det_arg += kTwoPi;
  angles.alpha[0] = det_arg / static_cast<double>(n);

  SquareMatrix w = v;
  w.promote_to_complex();
  const Complex unphase = std::polar(1.0, -angles.alpha[0]);
  for (auto& x : w.mutable_entries()) x *= unphase;

  std::vector<Complex> r(n + 1);
  std::vector<double> mag(n + 1), prefix(n + 1);
  for (std::size_t j = n - 1; j >= 1; --j) {
    for (std::size_t l = 1; l <= j + 1; ++l) {
      r[l] = w(j, l - 1);
      mag[l] = std::abs(r[l]);
    }
    prefix[0] = 0.0;
    for (std::size_t l = 1; l <= j + 1; ++l) prefix[l] = prefix[l - 1] + mag[l] * mag[l];

    for (std::size_t l = j; l >= 1; --l) {
      const double norm = std::sqrt(prefix[l]);
      if (norm < kDegenerate) {
        for (std::size_t m = 1; m <= l; ++m) angles.phi_at(m, j + 1) = 0.0;
        break;
      }
      angles.phi_at(l, j + 1) = std::atan2(norm, mag[l + 1]);
    }
    angles.alpha[j] = mag[j + 1] > kDegenerate ? wrap(-std::arg(r[j + 1])) : 0.0;
    double cum = 0.0;
    for (std::size_t l = j; l >= 1; --l) {
      double psi = 0.0;
      if (mag[l] > kDegenerate) {
        const Complex signed_r = ((j + 1 - l) % 2 == 0) ? r[l] : -r[l];
        psi = wrap(-std::arg(signed_r) - cum);
      }
      angles.psi_at(l, j + 1) = psi;
      cum += psi;
    }

    // W <- W E_j^dagger = W U_1^dagger ... U_j^dagger.
    for (std::size_t l = 1; l <= j; ++l) {
      const double alpha = l == j ? angles.alpha[j] : 0.0;
      right_apply2(w, l - 1, adjoint2(su2(angles.phi_at(l, j + 1), angles.psi_at(l, j + 1), alpha)));
    }
  }
  return angles;
}

double density_so(const EulerAnglesSO& angles) {
  validate(angles);
  const std::size_t n = angles.n;
  double d = std::pow(2.0, static_cast<double>(n * (n - 1)) / 4.0);
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t j = 2; j < k; ++j) d *= std::pow(exact_sin(angles.at(j, k)), static_cast<double>(j - 1));
  return d;
}

double density_u(const EulerAnglesU& angles) {
  validate(angles);
  const std::size_t n = angles.n;
  double d = std::pow(2.0, static_cast<double>(n * (n - 1)) / 2.0);
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      const double phi = angles.phi_at(j, k);
      d *= exact_cos(phi) * std::pow(std::sin(phi), static_cast<double>(2 * j - 1));
    }
  }
  return d;
}

double density_sp(const EulerAnglesSp& angles) {
  validate(angles);
  const std::size_t n = angles.n;
  double d = std::pow(2.0, static_cast<double>(n * (n - 1)));
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      const double rho = angles.rho_at(j, k);
      const double c = exact_cos(rho);
      d *= c * c * c * std::pow(std::sin(rho), static_cast<double>(4 * j - 1));
      d *= 0.5 * std::sin(2.0 * angles.q_at(j, k).phi);
    }
  }
  for (const auto& q : angles.q) d *= 0.5 * std::sin(2.0 * q.phi);
  return d;
}

}  // namespace haarforge
