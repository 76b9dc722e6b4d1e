// Copyright 2026 The adcfef Authors
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
#include <initializer_list>
#include <span>
#include <vector>

namespace adcfef::qmat {

using Complex = std::complex<double>;

/// Structure tolerance for Hermiticity and trace checks.
inline constexpr double kStructureTol = 1e-12;
/// Spectral tolerance for positivity and eigen reconstruction.
inline constexpr double kSpectralTol = 1e-10;

/// Dense square complex matrix, row-major. Entries are always finite.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  void set(std::size_t row, std::size_t col, Complex value);
  std::span<const Complex> entries() const noexcept { return entries_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
/// Entry-wise complex conjugate (no transpose).
ComplexMatrix conjugate(const ComplexMatrix& a);
/// Kronecker product. The left factor is qubit A, so basis order is
/// |00>, |01>, |10>, |11> for two qubits.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }
inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return subtract(a, b); }
inline ComplexMatrix operator*(Complex factor, const ComplexMatrix& a) { return scale(a, factor); }

Complex trace(const ComplexMatrix& a);
/// max |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |a - a^dagger|.
double hermiticity_residual(const ComplexMatrix& a);
/// |v><v| for a (not necessarily normalized) vector v.
ComplexMatrix outer(std::span<const Complex> v);

/// Eigenvalues sorted descending; column i of `eigenvectors` belongs to
/// eigenvalue i.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::vector<Complex> vector(std::size_t i) const;
  /// sum_i lambda_i v_i v_i^dagger
  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Throws HermiticityViolation for non-Hermitian input
/// and ConvergenceFailure after 100 sweeps.
EigenDecomposition hermitian_eigen(const ComplexMatrix& a);

/// Principal square root of a Hermitian positive-semidefinite matrix.
/// Eigenvalues in [-kSpectralTol, 0) are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// Validated Hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }
  const Complex& operator()(std::size_t row, std::size_t col) const { return mat_(row, col); }

  friend DensityMatrix make_density(const ComplexMatrix& m);
  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Validates without repairing; throws HermiticityViolation, TraceViolation
/// or PositivityViolation.
DensityMatrix make_density(const ComplexMatrix& m);

/// Projector onto a normalized pure state.
DensityMatrix pure_state(std::span<const Complex> amplitudes);

/// Reduced state of qubit A (traces out B) for a two-qubit matrix.
ComplexMatrix trace_out_b(const ComplexMatrix& m);
/// Reduced state of qubit B (traces out A).
ComplexMatrix trace_out_a(const ComplexMatrix& m);

}  // namespace adcfef::qmat
