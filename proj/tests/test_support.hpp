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

// Test-only helpers: random generators and oracles that do not share code
// paths with the library routines they check.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "adcfef/qmat.hpp"

namespace adcfef::testing {

using qmat::Complex;
using qmat::ComplexMatrix;

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, u(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z{u(rng), u(rng)};
      m.set(i, j, z);
      m.set(j, i, std::conj(z));
    }
  }
  return m;
}

inline std::vector<Complex> random_pure(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(n);
  double norm = 0.0;
  for (auto& z : v) {
    z = {g(rng), g(rng)};
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return v;
}

/// Gram-Schmidt on Gaussian columns.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (auto& c : cols)
    for (auto& z : c) z = {g(rng), g(rng)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex dot{};
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < n; ++i) cols[k][i] -= dot * cols[j][i];
    }
    double norm = 0.0;
    for (auto& z : cols[k]) norm += std::norm(z);
    for (auto& z : cols[k]) z /= std::sqrt(norm);
  }
  ComplexMatrix u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u.set(i, j, cols[j][i]);
  return u;
}

/// <v| M |v> by direct summation.
inline double expectation(const ComplexMatrix& m, const std::vector<Complex>& v) {
  Complex s{};
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += std::conj(v[i]) * m(i, j) * v[j];
  return s.real();
}

/// Characteristic polynomial coefficients c_0..c_n of det(lambda I - A) by
/// Faddeev-LeVerrier; c_n = 1.
inline std::vector<Complex> char_poly(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next.set(i, i, next(i, i) + c[n - k + 1]);
    m = next;
    c[n - k] = -qmat::trace(a * m) / static_cast<double>(k);
  }
  return c;
}

/// Maximally entangled state (U (x) I)|Phi+> for U parametrized by a mixing
/// angle and two phases (global phase dropped).
inline std::vector<Complex> entangled_from_angles(double mix, double psi, double chi) {
  const double h = std::numbers::sqrt2 / 2.0;
  return {std::polar(h * std::cos(mix), psi), std::polar(h * std::sin(mix), chi),
          -std::polar(h * std::sin(mix), -chi), std::polar(h * std::cos(mix), -psi)};
}

/// FEF by grid search over the three angles followed by coordinate refinement.
inline double fef_brute_force(const ComplexMatrix& rho) {
  constexpr int kGrid = 24;
  const double pi = std::numbers::pi;
  std::array<double, 3> best_x{};
  double best = -1.0;
  const auto eval = [&](const std::array<double, 3>& x) {
    return expectation(rho, entangled_from_angles(x[0], x[1], x[2]));
  };
  for (int i = 0; i <= kGrid; ++i)
    for (int j = 0; j < kGrid; ++j)
      for (int k = 0; k < kGrid; ++k) {
        const std::array<double, 3> x{0.5 * pi * i / kGrid, 2 * pi * j / kGrid, 2 * pi * k / kGrid};
        const double v = eval(x);
        if (v > best) {
          best = v;
          best_x = x;
        }
      }
  for (double step = 0.2; step > 1e-9; step *= 0.5) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int d = 0; d < 3; ++d)
        for (double dir : {-1.0, 1.0}) {
          auto x = best_x;
          x[d] += dir * step;
          const double v = eval(x);
          if (v > best) {
            best = v;
            best_x = x;
            moved = true;
          }
        }
    }
  }
  return best;
}

/// Concurrence of an X-shaped two-qubit state (only diagonal and anti-diagonal
/// entries non-zero).
inline double x_state_concurrence(const ComplexMatrix& r) {
  const double a = std::abs(r(0, 3)) - std::sqrt(r(1, 1).real() * r(2, 2).real());
  const double b = std::abs(r(1, 2)) - std::sqrt(r(0, 0).real() * r(3, 3).real());
  return 2.0 * std::max({0.0, a, b});
}

}  // namespace adcfef::testing
