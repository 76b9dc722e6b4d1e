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

// Cyclic Jacobi eigensolver for small Hermitian matrices.
//
// Each rotation first removes the phase of a_pq with a diagonal unitary, then
// applies the real symmetric Jacobi rotation to the resulting 2x2 block.

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "adcfef/error.hpp"
#include "adcfef/qmat.hpp"

namespace adcfef::qmat {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-13;

struct Work {
  std::size_t n;
  std::vector<Complex> a;  // row-major
  std::vector<Complex> v;  // eigenvectors, columns

  Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Complex& vec(std::size_t i, std::size_t j) { return v[i * n + j]; }

  double off_diagonal_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a[i * n + j]);
    return std::sqrt(s);
  }

  // A <- V^dagger A V for V = [[c, s], [-s w*, c w*]] on (p, q).
  void rotate(std::size_t p, std::size_t q) {
    const Complex apq = at(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex w = apq / mag;
    const Complex wc = std::conj(w);
    const double app = at(p, p).real();
    const double aqq = at(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex vpp = c, vpq = s, vqp = -s * wc, vqq = c * wc;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex akp = at(k, p), akq = at(k, q);
      at(k, p) = akp * vpp + akq * vqp;
      at(k, q) = akp * vpq + akq * vqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const Complex apk = at(p, k), aqk = at(q, k);
      at(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
      at(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ekp = vec(k, p), ekq = vec(k, q);
      vec(k, p) = ekp * vpp + ekq * vqp;
      vec(k, q) = ekp * vpq + ekq * vqq;
    }
    at(p, q) = 0.0;
    at(q, p) = 0.0;
    at(p, p) = at(p, p).real();
    at(q, q) = at(q, q).real();
  }
};

}  // namespace

std::vector<Complex> EigenDecomposition::vector(std::size_t i) const {
  const std::size_t n = eigenvectors.dim();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = eigenvectors(k, i);
  return out;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  const std::size_t n = eigenvectors.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out[i * n + j] += eigenvalues[e] * eigenvectors(i, e) * std::conj(eigenvectors(j, e));
  return ComplexMatrix(n, std::move(out));
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& a) {
  const double herm = hermiticity_residual(a);
  if (herm > kStructureTol) {
    throw HermiticityViolation(
        herm, fmt::format("hermitian_eigen: input not Hermitian, residual {:.3e}", herm));
  }
  const std::size_t n = a.dim();
  Work w{n, std::vector<Complex>(n * n), std::vector<Complex>(n * n)};
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w.vec(i, i) = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      w.at(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
      frob += std::norm(w.at(i, j));
    }
  }
  const double tol = kOffDiagonalTol * std::max(1.0, std::sqrt(frob));

  int sweep = 0;
  while (w.off_diagonal_norm() >= tol) {
    if (++sweep > kMaxSweeps) {
      throw ConvergenceFailure(fmt::format(
          "hermitian_eigen: no convergence after {} sweeps (off-diagonal norm {:.3e})", kMaxSweeps,
          w.off_diagonal_norm()));
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) w.rotate(p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return w.at(i, i).real() > w.at(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  std::vector<Complex> vecs(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = w.at(order[c], order[c]).real();
    for (std::size_t k = 0; k < n; ++k) vecs[k * n + c] = w.vec(k, order[c]);
  }
  out.eigenvectors = ComplexMatrix(n, std::move(vecs));
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const EigenDecomposition eig = hermitian_eigen(a);
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t e = 0; e < n; ++e) {
    const double lambda = eig.eigenvalues[e];
    if (lambda < -kSpectralTol) {
      throw PositivityViolation(-lambda,
                                fmt::format("psd_sqrt: negative eigenvalue {:.6e}", lambda));
    }
    const double root = std::sqrt(std::max(lambda, 0.0));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out[i * n + j] += root * eig.eigenvectors(i, e) * std::conj(eig.eigenvectors(j, e));
  }
  return ComplexMatrix(n, std::move(out));
}

}  // namespace adcfef::qmat
