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

#include "haarforge/samplers.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "haarforge/errors.hpp"

namespace haarforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

QuaternionAngles random_quaternion(RandomStream& s) {
  QuaternionAngles q;
  q.phi = s.sin2phi_quaternion();
  q.psi = s.uniform(0.0, kTwoPi);
  q.alpha = s.uniform(0.0, kTwoPi);
  return q;
}

void require_n(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum) {
    throw DomainError(std::string(what) + ": dimension must be at least " + std::to_string(minimum));
  }
}

// Standard complex Gaussian: (x + iy)/sqrt(2), E|z|^2 = 1.
Complex complex_gaussian(RandomStream& s) {
  const double x = s.gaussian();
  const double y = s.gaussian();
  return Complex(x, y) * std::numbers::sqrt2 * 0.5;
}

// Orthonormalises the columns of a Gaussian matrix; false if rank-deficient.
bool gram_schmidt(SquareMatrix& g) {
  const std::size_t n = g.dim();
  auto e = g.mutable_entries();
  for (std::size_t c = 0; c < n; ++c) {
    double original = 0.0;
    for (std::size_t r = 0; r < n; ++r) original += std::norm(e[r * n + c]);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < c; ++p) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < n; ++r) proj += std::conj(e[r * n + p]) * e[r * n + c];
        for (std::size_t r = 0; r < n; ++r) e[r * n + c] -= proj * e[r * n + p];
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(e[r * n + c]);
    if (!(norm > 1e-24 * original) || norm == 0.0) return false;
    const double inv = 1.0 / std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) e[r * n + c] *= inv;
  }
  return true;
}

bool is_real_group(Group g) { return g == Group::so || g == Group::o; }

void require_matrix_group(const GroupId& group, const char* what) {
  if (group.tag != Group::so && group.tag != Group::o && group.tag != Group::u) {
    throw DomainError(std::string(what) + ": supports so, o and u only");
  }
  require_n(group.n, 1, what);
}

SquareMatrix householder_once(RandomStream& s, std::size_t n, bool real) {
  SquareMatrix x = SquareMatrix::identity(n, real ? MatrixKind::real : MatrixKind::complex);
  auto e = x.mutable_entries();
  // E_0: random sign or phase on coordinate 1.
  e[0] = real ? Complex(s.bernoulli(0.5) ? -1.0 : 1.0, 0.0) : std::polar(1.0, s.uniform(0.0, kTwoPi));

  // X <- E_{N-j} X for j = N-1 down to 1, i.e. E_1 is applied first.
  std::vector<Complex> z;
  for (std::size_t m = 2; m <= n; ++m) {
    z.assign(m, Complex(0.0, 0.0));
    double norm = 0.0;
    while (norm == 0.0) {
      norm = 0.0;
      for (auto& v : z) {
        v = real ? Complex(s.gaussian(), 0.0) : complex_gaussian(s);
        norm += std::norm(v);
      }
    }
    norm = std::sqrt(norm);
    for (auto& v : z) v /= norm;
    const double last_abs = std::abs(z[m - 1]);
    const Complex phase = last_abs > 0.0 ? z[m - 1] / last_abs : Complex(1.0, 0.0);
    std::vector<Complex> w = z;
    w[m - 1] += phase;
    double wn = 0.0;
    for (const auto& v : w) wn += std::norm(v);
    wn = std::sqrt(wn);
    for (auto& v : w) v /= wn;
    // H = -phase (I - 2 w w^dagger) acting on rows 0..m-1.
    for (std::size_t c = 0; c < n; ++c) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < m; ++r) dot += std::conj(w[r]) * e[r * n + c];
      for (std::size_t r = 0; r < m; ++r) e[r * n + c] = -phase * (e[r * n + c] - 2.0 * w[r] * dot);
    }
  }
  if (real)
    for (auto& v : e) v = Complex(v.real(), 0.0);
  return x;
}

}  // namespace

std::string_view to_string(Group g) noexcept {
  switch (g) {
    case Group::so: return "so";
    case Group::o: return "o";
    case Group::u: return "u";
    case Group::sp: return "sp";
    case Group::sn: return "sn";
  }
  return "?";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::euler: return "euler";
    case Method::qr: return "qr";
    case Method::householder: return "householder";
    case Method::hessenberg: return "hessenberg";
    case Method::cmv: return "cmv";
    case Method::bubble: return "bubble";
  }
  return "?";
}

std::size_t PermutationWord::fixed_points() const noexcept {
  std::size_t count = 0;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    if (sigma[j] == j + 1) ++count;
  return count;
}

PermutationWord permutation_from_bits(std::size_t n, std::vector<std::uint8_t> bits) {
  if (n == 0) throw DimensionError("permutation_from_bits: n must be positive");
  if (bits.size() != n * (n - 1) / 2) throw DimensionError("permutation_from_bits: wrong number of bits");
  // pos[c] = row holding the 1 in column c of the running product.
  std::vector<std::size_t> pos(n);
  for (std::size_t c = 0; c < n; ++c) pos[c] = c;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = j; i >= 1; --i) {
      const std::uint8_t mu = bits[permutation_bit_index(i, j)];
      if (mu > 1) throw DomainError("permutation_from_bits: bits must be 0 or 1");
      if (mu == 1) std::swap(pos[i - 1], pos[i]);
    }
  }
  PermutationWord w;
  w.n = n;
  w.bits = std::move(bits);
  w.sigma.resize(n);
  for (std::size_t c = 0; c < n; ++c) w.sigma[c] = pos[c] + 1;
  return w;
}

SquareMatrix permutation_matrix(const PermutationWord& word) {
  SquareMatrix p(word.n, MatrixKind::real);
  for (std::size_t c = 0; c < word.n; ++c) p.set(word.sigma[c] - 1, c, 1.0);
  return p;
}

EulerAnglesSO random_angles_so(RandomStream& s, std::size_t n) {
  require_n(n, 1, "random_angles_so");
  EulerAnglesSO a = EulerAnglesSO::zeros(n);
  for (std::size_t k = 2; k <= n; ++k) {
    a.at(1, k) = s.uniform(0.0, kTwoPi);
    for (std::size_t j = 2; j < k; ++j) a.at(j, k) = std::acos(s.cos_theta_so(static_cast<unsigned>(j)));
  }
  return a;
}

EulerAnglesU random_angles_u(RandomStream& s, std::size_t n) {
  require_n(n, 1, "random_angles_u");
  EulerAnglesU a = EulerAnglesU::zeros(n);
  a.alpha[0] = s.uniform(0.0, kTwoPi);
  for (std::size_t k = 2; k <= n; ++k) {
    a.alpha[k - 1] = s.uniform(0.0, kTwoPi);
    for (std::size_t j = 1; j < k; ++j) {
      a.phi_at(j, k) = s.phi_unitary(static_cast<unsigned>(j));
      a.psi_at(j, k) = s.uniform(0.0, kTwoPi);
    }
  }
  return a;
}

EulerAnglesSp random_angles_sp(RandomStream& s, std::size_t n) {
  require_n(n, 1, "random_angles_sp");
  EulerAnglesSp a = EulerAnglesSp::zeros(n);
  a.q[0] = random_quaternion(s);
  for (std::size_t k = 2; k <= n; ++k) {
    a.q[k - 1] = random_quaternion(s);
    for (std::size_t j = 1; j < k; ++j) {
      a.rho_at(j, k) = s.rho_symplectic(static_cast<unsigned>(j));
      a.q_at(j, k) = random_quaternion(s);
    }
  }
  return a;
}

SquareMatrix haar_so_euler(RandomStream& s, std::size_t n) {
  require_n(n, 2, "haar_so_euler");
  return compose_so(random_angles_so(s, n));
}

SquareMatrix haar_o_euler(RandomStream& s, std::size_t n) {
  require_n(n, 1, "haar_o_euler");
  SquareMatrix v = n == 1 ? SquareMatrix::identity(1) : haar_so_euler(s, n);
  if (s.bernoulli(0.5)) {
    auto e = v.mutable_entries();
    for (std::size_t r = 0; r < n; ++r) e[r * n] = -e[r * n];
  }
  return v;
}

SquareMatrix haar_u_euler(RandomStream& s, std::size_t n) {
  require_n(n, 1, "haar_u_euler");
  return compose_u(random_angles_u(s, n));
}

SquareMatrix haar_sp_euler(RandomStream& s, std::size_t n) {
  require_n(n, 1, "haar_sp_euler");
  return compose_sp(random_angles_sp(s, n));
}

SquareMatrix haar_qr(RandomStream& s, const GroupId& group) {
  require_matrix_group(group, "haar_qr");
  const std::size_t n = group.n;
  const bool real = is_real_group(group.tag);
  for (;;) {
    SquareMatrix g(n, real ? MatrixKind::real : MatrixKind::complex);
    for (auto& v : g.mutable_entries()) v = real ? Complex(s.gaussian(), 0.0) : complex_gaussian(s);
    if (!gram_schmidt(g)) continue;
    if (group.tag == Group::so && determinant(g).real() < 0.0) continue;
    return g;
  }
}

SquareMatrix haar_householder(RandomStream& s, const GroupId& group) {
  require_matrix_group(group, "haar_householder");
  const bool real = is_real_group(group.tag);
  for (;;) {
    SquareMatrix x = householder_once(s, group.n, real);
    if (group.tag == Group::so && determinant(x).real() < 0.0) continue;
    return x;
  }
}

PermutationWord sample_permutation(RandomStream& s, std::size_t n) {
  require_n(n, 1, "sample_permutation");
  std::vector<std::uint8_t> bits(n * (n - 1) / 2);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 1; i <= j; ++i) {
      const double p = static_cast<double>(i) / static_cast<double>(i + 1);
      bits[permutation_bit_index(i, j)] = s.bernoulli(p) ? 1 : 0;
    }
  }
  return permutation_from_bits(n, std::move(bits));
}

SquareMatrix coe_sample(RandomStream& s, std::size_t n) {
  require_n(n, 1, "coe_sample");
  const SquareMatrix u = haar_qr(s, {Group::u, n});
  return multiply(u.transpose(), u);
}

SquareMatrix cse_sample(RandomStream& s, std::size_t n) {
  require_n(n, 1, "cse_sample");
  const SquareMatrix u = haar_qr(s, {Group::u, 2 * n});
  const SquareMatrix z = quaternion_structure(n);
  SquareMatrix z_inv = z;
  for (auto& v : z_inv.mutable_entries()) v = -v;
  return multiply(multiply(multiply(z_inv, u.transpose()), z), u);
}

SquareMatrix sample_group(RandomStream& s, const GroupId& group, Method method) {
  auto unsupported = [&]() {
    return DomainError("no sampler for group " + std::string(to_string(group.tag)) + " with method " +
                       std::string(to_string(method)));
  };
  switch (group.tag) {
    case Group::so:
    case Group::o:
    case Group::u:
      if (method == Method::qr) return haar_qr(s, group);
      if (method == Method::householder) return haar_householder(s, group);
      if (method == Method::euler) {
        if (group.tag == Group::so) return haar_so_euler(s, group.n);
        if (group.tag == Group::o) return haar_o_euler(s, group.n);
        return haar_u_euler(s, group.n);
      }
      throw unsupported();
    case Group::sp:
      if (method == Method::euler) return haar_sp_euler(s, group.n);
      throw unsupported();
    case Group::sn:
      if (method == Method::bubble) return permutation_matrix(sample_permutation(s, group.n));
      throw unsupported();
  }
  throw unsupported();
}

}  // namespace haarforge
