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

#include "haarforge/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "haarforge/errors.hpp"

namespace haarforge {

namespace {

std::size_t checked_sqrt(std::size_t count) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(count))));
  if (n * n != count || n == 0) {
    throw DimensionError("entry count " + std::to_string(count) + " is not a positive square");
  }
  return n;
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t dim, MatrixKind kind)
    : dim_(dim), kind_(kind), data_(dim * dim, Complex(0.0, 0.0)) {
  if (dim == 0) throw DimensionError("matrix dimension must be positive");
}

SquareMatrix SquareMatrix::identity(std::size_t dim, MatrixKind kind) {
  SquareMatrix m(dim, kind);
  for (std::size_t i = 0; i < dim; ++i) m.data_[i * dim + i] = 1.0;
  return m;
}

SquareMatrix SquareMatrix::zeros(std::size_t dim, MatrixKind kind) { return SquareMatrix(dim, kind); }

SquareMatrix SquareMatrix::from_real(std::span<const double> values) {
  SquareMatrix m(checked_sqrt(values.size()), MatrixKind::real);
  std::transform(values.begin(), values.end(), m.data_.begin(),
                 [](double v) { return Complex(v, 0.0); });
  return m;
}

SquareMatrix SquareMatrix::from_complex(std::span<const Complex> values) {
  SquareMatrix m(checked_sqrt(values.size()), MatrixKind::complex);
  std::copy(values.begin(), values.end(), m.data_.begin());
  return m;
}

void SquareMatrix::set(std::size_t row, std::size_t col, Complex value) {
  if (kind_ == MatrixKind::real && value.imag() != 0.0) {
    throw DomainError("cannot store a complex value in a real matrix");
  }
  data_[row * dim_ + col] = value;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(dim_, kind_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t.data_[j * dim_ + i] = data_[i * dim_ + j];
  return t;
}

SquareMatrix SquareMatrix::adjoint() const {
  SquareMatrix t(dim_, kind_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t.data_[j * dim_ + i] = std::conj(data_[i * dim_ + j]);
  return t;
}

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("multiply: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
  const std::size_t n = a.dim();
  const MatrixKind kind =
      (a.is_real() && b.is_real()) ? MatrixKind::real : MatrixKind::complex;
  SquareMatrix c(n, kind);
  auto out = c.mutable_entries();
  const auto lhs = a.entries();
  const auto rhs = b.entries();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = lhs[i * n + k];
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * rhs[k * n + j];
    }
  }
  return c;
}

double adjoint_residual(const SquareMatrix& m) {
  const std::size_t n = m.dim();
  const auto e = m.entries();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += std::conj(e[k * n + i]) * e[k * n + j];
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

Complex determinant(const SquareMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  Complex det = 1.0;
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
    if (best == 0.0) return Complex(0.0, 0.0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[pivot * n + j]);
      det = -det;
    }
    const Complex p = a[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = a[r * n + col] / p;
      if (factor == Complex(0.0, 0.0)) continue;
      for (std::size_t j = col + 1; j < n; ++j) a[r * n + j] -= factor * a[col * n + j];
    }
  }
  return det;
}

Complex charpoly_eval(const SquareMatrix& m, Complex lambda) {
  SquareMatrix shifted(m.dim(), MatrixKind::complex);
  auto out = shifted.mutable_entries();
  const auto in = m.entries();
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n * n; ++i) out[i] = -in[i];
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] += lambda;
  return determinant(shifted);
}

SquareMatrix quaternion_structure(std::size_t half_dim) {
  SquareMatrix z(2 * half_dim, MatrixKind::real);
  for (std::size_t b = 0; b < half_dim; ++b) {
    z.set(2 * b, 2 * b + 1, -1.0);
    z.set(2 * b + 1, 2 * b, 1.0);
  }
  return z;
}

double symplectic_residual(const SquareMatrix& m) {
  if (m.dim() % 2 != 0) throw DimensionError("symplectic_residual: odd dimension");
  const SquareMatrix z = quaternion_structure(m.dim() / 2);
  const SquareMatrix lhs = multiply(multiply(m.transpose(), z), m);
  return max_abs_difference(lhs, z);
}

double symmetry_residual(const SquareMatrix& m) { return max_abs_difference(m, m.transpose()); }

double self_duality_residual(const SquareMatrix& m) {
  if (m.dim() % 2 != 0) throw DimensionError("self_duality_residual: odd dimension");
  const SquareMatrix z = quaternion_structure(m.dim() / 2);
  // Z^{-1} = -Z
  SquareMatrix z_inv = z;
  for (auto& v : z_inv.mutable_entries()) v = -v;
  const SquareMatrix dual = multiply(multiply(z_inv, m.transpose()), z);
  return max_abs_difference(dual, m);
}

double max_abs_difference(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_difference: dimension mismatch");
  double worst = 0.0;
  const auto x = a.entries();
  const auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

}  // namespace haarforge
