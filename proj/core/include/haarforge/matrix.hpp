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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace haarforge {

using Complex = std::complex<double>;

enum class MatrixKind { real, complex };

/// Dense N x N matrix over the complex numbers, stored row-major.
///
/// A matrix tagged `MatrixKind::real` keeps every imaginary part exactly
/// zero; writing a complex value with a nonzero imaginary part into it
/// throws. Indices are 0-based.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t dim, MatrixKind kind);

  static SquareMatrix identity(std::size_t dim, MatrixKind kind = MatrixKind::real);
  static SquareMatrix zeros(std::size_t dim, MatrixKind kind = MatrixKind::real);
  /// Row-major real entries; `values.size()` must be a perfect square.
  static SquareMatrix from_real(std::span<const double> values);
  /// Row-major complex entries; the kind is `complex` regardless of values.
  static SquareMatrix from_complex(std::span<const Complex> values);

  std::size_t dim() const noexcept { return dim_; }
  MatrixKind kind() const noexcept { return kind_; }
  bool is_real() const noexcept { return kind_ == MatrixKind::real; }

  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  void set(std::size_t row, std::size_t col, double value) noexcept {
    data_[row * dim_ + col] = Complex(value, 0.0);
  }
  void set(std::size_t row, std::size_t col, Complex value);

  /// Re-tag a real matrix as complex (no-op for complex matrices).
  void promote_to_complex() noexcept { kind_ = MatrixKind::complex; }

  std::span<const Complex> entries() const noexcept { return data_; }
  /// Raw mutable access for kernels that maintain the kind invariant
  /// themselves (e.g. applying real rotations to a real matrix).
  std::span<Complex> mutable_entries() noexcept { return data_; }

  SquareMatrix transpose() const;
  SquareMatrix adjoint() const;

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  MatrixKind kind_ = MatrixKind::real;
  std::vector<Complex> data_;
};

/// Sorted eigenphases in [0, 2*pi), one per eigenvalue counted with
/// multiplicity.
struct EigenPhaseList {
  std::vector<double> phases;
  std::size_t dim() const noexcept { return phases.size(); }
};

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b);

/// max |m^dagger m - I| (transpose for real matrices).
double adjoint_residual(const SquareMatrix& m);

/// Determinant by Gaussian elimination with partial pivoting.
Complex determinant(const SquareMatrix& m);

/// det(lambda I - m).
Complex charpoly_eval(const SquareMatrix& m, Complex lambda);

/// The quaternionic structure matrix I_N (x) [[0,-1],[1,0]] of size 2N.
SquareMatrix quaternion_structure(std::size_t half_dim);

/// max |m^T Z m - Z| with Z = quaternion_structure(dim/2).
double symplectic_residual(const SquareMatrix& m);

/// max |m - m^T|.
double symmetry_residual(const SquareMatrix& m);

/// max |Z^{-1} m^T Z - m|: zero for self-dual quaternion matrices.
double self_duality_residual(const SquareMatrix& m);

/// max |a - b| over entries.
double max_abs_difference(const SquareMatrix& a, const SquareMatrix& b);

/// Eigenphases of a unitary-class matrix.
///
/// Throws PreconditionError if adjoint_residual(m) > 1e-8 * N and
/// ConvergenceError if the inner Hermitian eigensolver stalls. Phases that
/// agree to within 1e-9 (including across the 0 / 2*pi seam) are merged
/// and reported with multiplicity.
EigenPhaseList eigenphases(const SquareMatrix& m);

}  // namespace haarforge
