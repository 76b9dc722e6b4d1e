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

#include "adcfef/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "adcfef/error.hpp"

namespace adcfef::qmat {
namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(fmt::format("{}: dimension {} vs {}", op, a.dim(), b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw InvalidArgument("ComplexMatrix: dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw InvalidArgument("ComplexMatrix: dimension must be positive");
  if (entries_.size() != dim * dim) {
    throw DimensionMismatch(
        fmt::format("ComplexMatrix: {} entries for dimension {}", entries_.size(), dim));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
    throw InvalidArgument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0) throw InvalidArgument("ComplexMatrix: dimension must be positive");
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("ComplexMatrix: ragged row list");
    for (const auto& z : row) {
      if (!is_finite(z)) throw InvalidArgument("ComplexMatrix: non-finite entry");
      entries_.push_back(z);
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

void ComplexMatrix::set(std::size_t row, std::size_t col, Complex value) {
  if (row >= dim_ || col >= dim_) throw InvalidArgument("ComplexMatrix::set: index out of range");
  if (!is_finite(value)) throw InvalidArgument("ComplexMatrix::set: non-finite entry");
  entries_[row * dim_ + col] = value;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b(k, j);
    }
  }
  return ComplexMatrix(n, std::move(out));
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = std::conj(a(i, j));
  return ComplexMatrix(n, std::move(out));
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (auto& z : out) z = std::conj(z);
  return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  std::vector<Complex> out(n * n);
  for (std::size_t ia = 0; ia < na; ++ia)
    for (std::size_t ja = 0; ja < na; ++ja)
      for (std::size_t ib = 0; ib < nb; ++ib)
        for (std::size_t jb = 0; jb < nb; ++jb)
          out[(ia * nb + ib) * n + (ja * nb + jb)] = a(ia, ja) * b(ib, jb);
  return ComplexMatrix(n, std::move(out));
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "add");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
  return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "subtract");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries()[i];
  return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (auto& z : out) z *= factor;
  return ComplexMatrix(a.dim(), std::move(out));
}

Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double hermiticity_residual(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

ComplexMatrix outer(std::span<const Complex> v) {
  const std::size_t n = v.size();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = v[i] * std::conj(v[j]);
  return ComplexMatrix(n, std::move(out));
}

DensityMatrix make_density(const ComplexMatrix& m) {
  const double herm = hermiticity_residual(m);
  if (herm > kStructureTol) {
    throw HermiticityViolation(
        herm, fmt::format("density matrix: Hermiticity violated, |m - m^dagger|_max = {:.3e}", herm));
  }
  const Complex tr = trace(m);
  const double trace_err = std::abs(tr - 1.0);
  if (trace_err > kStructureTol) {
    throw TraceViolation(trace_err,
                         fmt::format("density matrix: trace is {:.15g}{:+.3e}i, |tr - 1| = {:.3e}",
                                     tr.real(), tr.imag(), trace_err));
  }
  const double min_eig = hermitian_eigen(m).eigenvalues.back();
  if (min_eig < -kSpectralTol) {
    throw PositivityViolation(
        -min_eig, fmt::format("density matrix: not positive semidefinite, smallest eigenvalue {:.6e}",
                              min_eig));
  }
  return DensityMatrix(m);
}

DensityMatrix pure_state(std::span<const Complex> amplitudes) {
  return make_density(outer(amplitudes));
}

ComplexMatrix trace_out_b(const ComplexMatrix& m) {
  if (m.dim() != 4) throw DimensionMismatch("trace_out_b: expected a two-qubit matrix");
  ComplexMatrix r(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.set(i, j, m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1));
  return r;
}

ComplexMatrix trace_out_a(const ComplexMatrix& m) {
  if (m.dim() != 4) throw DimensionMismatch("trace_out_a: expected a two-qubit matrix");
  ComplexMatrix r(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.set(i, j, m(i, j) + m(i + 2, j + 2));
  return r;
}

}  // namespace adcfef::qmat
