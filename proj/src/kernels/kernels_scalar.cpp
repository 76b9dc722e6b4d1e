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

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

namespace adcfef::kernels::detail::scalar {
namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline double form_at(const double* form, const double* const* re, const double* const* im,
                      std::size_t i) {
  double q = 0.0;
  for (int j = 0; j < 4; ++j) q += form[j] * (re[j][i] * re[j][i] + im[j][i] * im[j][i]);
  double cross = 0.0;
  for (int k = 0; k < 6; ++k) {
    const int a = kPairs[k][0];
    const int b = kPairs[k][1];
    // Re(conj(psi_a) * h_ab * psi_b)
    const double dot = re[a][i] * re[b][i] + im[a][i] * im[b][i];
    const double wedge = re[a][i] * im[b][i] - im[a][i] * re[b][i];
    cross += form[4 + k] * dot - form[10 + k] * wedge;
  }
  return q + 2.0 * cross;
}

}  // namespace

void quadratic_forms(const double* form, const double* const* re, const double* const* im,
                     std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = form_at(form, re, im, i);
}

double max_quadratic_form(const double* form, const double* const* re, const double* const* im,
                          std::size_t n) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, form_at(form, re, im, i));
  return best;
}

void fef_one_damped(const double* pb, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 1.0 + std::sqrt(1.0 - pb[i]);
    out[i] = 0.25 * t * t;
  }
}

void fef_two_damped_phi(const double* pa, const double* pb, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 1.0 + std::sqrt((1.0 - pa[i]) * (1.0 - pb[i]));
    out[i] = 0.25 * (pa[i] * pb[i] + t * t);
  }
}

void fef_two_damped_psi(const double* pa, const double* pb, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double f1 = 0.25 * (pa[i] + pb[i]);
    const double t = std::sqrt(1.0 - pa[i]) + std::sqrt(1.0 - pb[i]);
    out[i] = std::max(f1, 0.25 * t * t);
  }
}

}  // namespace adcfef::kernels::detail::scalar
