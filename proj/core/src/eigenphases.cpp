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

// Eigenphases of unitary-class matrices.
//
// The matrix is rotated by a global phase e^{i gamma} chosen so that -1 is
// far from its spectrum, mapped through the Cayley transform
//   H = i (I + W)^{-1} (I - W),   W = e^{i gamma} U,
// which is Hermitian with eigenvalues tan(phi/2), and diagonalised with the
// cyclic complex Jacobi method. Jacobi keeps degenerate eigenvalues (I_N,
// Kramers pairs of self-dual matrices, repeated permutation eigenvalues)
// accurate, which sign-change bracketing on the unit circle cannot do.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "haarforge/errors.hpp"
#include "haarforge/matrix.hpp"

namespace haarforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClusterTol = 1e-9;
constexpr int kMaxSweeps = 100;

using Dense = std::vector<Complex>;

// Solves a X = b in place (b is overwritten with X); both n x n row-major.
void solve_in_place(Dense a, Dense& b, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a[r * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) throw ConvergenceError("eigenphases: singular Cayley denominator");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[col * n + j], a[pivot * n + j]);
        std::swap(b[col * n + j], b[pivot * n + j]);
      }
    }
    const Complex p = a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r * n + col] / p;
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
      for (std::size_t j = 0; j < n; ++j) b[r * n + j] -= f * b[col * n + j];
    }
  }
  for (std::size_t ri = n; ri-- > 0;) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = b[ri * n + j];
      for (std::size_t k = ri + 1; k < n; ++k) acc -= a[ri * n + k] * b[k * n + j];
      b[ri * n + j] = acc / a[ri * n + ri];
    }
  }
}

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
std::vector<double> hermitian_eigenvalues(Dense a, std::size_t n) {
  double total = 0.0;
  for (const auto& v : a) total += std::norm(v);
  const double scale = std::max(1.0, std::sqrt(total));

  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p * n + q]);
    if (std::sqrt(off) <= 1e-15 * scale) {
      std::vector<double> eig(n);
      for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i].real();
      return eig;
    }
    if (sweep == kMaxSweeps) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const Complex ph = apq / mag;
        const double theta = (a[q * n + q].real() - a[p * n + p].real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex phc = std::conj(ph);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a[k * n + p];
          const Complex akq = a[k * n + q];
          a[k * n + p] = c * akp - s * phc * akq;
          a[k * n + q] = s * akp + c * phc * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a[p * n + k];
          const Complex aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * ph * aqk;
          a[q * n + k] = s * apk + c * ph * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
      }
    }
  }
  throw ConvergenceError("eigenphases: Jacobi iteration did not converge in " +
                         std::to_string(kMaxSweeps) + " sweeps");
}

double wrap_phase(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

}  // namespace

EigenPhaseList eigenphases(const SquareMatrix& m) {
  const std::size_t n = m.dim();
  const double residual = adjoint_residual(m);
  if (residual > 1e-8 * static_cast<double>(n)) {
    throw PreconditionError("eigenphases: input is not unitary (residual " + std::to_string(residual) + ")");
  }
  const auto u = m.entries();

  EigenPhaseList out;
  if (n == 1) {
    out.phases.push_back(wrap_phase(std::arg(u[0])));
    if (out.phases[0] > kTwoPi - kClusterTol) out.phases[0] = 0.0;
    return out;
  }

  // Pick gamma on a grid maximising |det(I + e^{i gamma} U)|.
  const std::size_t grid = 4 * n + 8;
  double best_gamma = 0.0;
  double best_abs = -1.0;
  for (std::size_t g = 0; g < grid; ++g) {
    const double gamma = kTwoPi * (static_cast<double>(g) + 0.5) / static_cast<double>(grid);
    const Complex rot = std::polar(1.0, gamma);
    SquareMatrix shifted(n, MatrixKind::complex);
    auto s = shifted.mutable_entries();
    for (std::size_t i = 0; i < n * n; ++i) s[i] = rot * u[i];
    for (std::size_t i = 0; i < n; ++i) s[i * n + i] += 1.0;
    const double d = std::abs(determinant(shifted));
    if (d > best_abs) {
      best_abs = d;
      best_gamma = gamma;
    }
  }

  const Complex rot = std::polar(1.0, best_gamma);
  Dense plus(n * n), minus(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    plus[i] = rot * u[i];
    minus[i] = -rot * u[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    plus[i * n + i] += 1.0;
    minus[i * n + i] += 1.0;
  }
  solve_in_place(plus, minus, n);  // minus <- (I + W)^{-1} (I - W)

  Dense h(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex hij = Complex(0.0, 1.0) * minus[i * n + j];
      const Complex hji = Complex(0.0, 1.0) * minus[j * n + i];
      h[i * n + j] = 0.5 * (hij + std::conj(hji));
    }
  }

  const std::vector<double> tangents = hermitian_eigenvalues(std::move(h), n);
  std::vector<double> phases(n);
  for (std::size_t k = 0; k < n; ++k) {
    double phase = wrap_phase(2.0 * std::atan(tangents[k]) - best_gamma);
    if (phase > kTwoPi - kClusterTol) phase = 0.0;
    phases[k] = phase;
  }
  std::sort(phases.begin(), phases.end());

  // Merge clusters and report each member at the cluster mean.
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && phases[end] - phases[end - 1] <= kClusterTol) ++end;
    if (end - start > 1) {
      double mean = 0.0;
      for (std::size_t k = start; k < end; ++k) mean += phases[k];
      mean /= static_cast<double>(end - start);
      for (std::size_t k = start; k < end; ++k) phases[k] = mean;
    }
    start = end;
  }
  out.phases = std::move(phases);
  return out;
}

}  // namespace haarforge
