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

// AVX2 + FMA variants. This file is compiled with -mavx2 -mfma and only
// reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

namespace adcfef::kernels::detail::avx2 {
namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
constexpr std::size_t kLanes = 4;

inline __m256d form4(const double* form, const double* const* re, const double* const* im,
                     std::size_t i) {
  __m256d vr[4], vi[4];
  for (int j = 0; j < 4; ++j) {
    vr[j] = _mm256_loadu_pd(re[j] + i);
    vi[j] = _mm256_loadu_pd(im[j] + i);
  }
  __m256d q = _mm256_setzero_pd();
  for (int j = 0; j < 4; ++j) {
    const __m256d norm = _mm256_fmadd_pd(vi[j], vi[j], _mm256_mul_pd(vr[j], vr[j]));
    q = _mm256_fmadd_pd(_mm256_set1_pd(form[j]), norm, q);
  }
  __m256d cross = _mm256_setzero_pd();
  for (int k = 0; k < 6; ++k) {
    const int a = kPairs[k][0];
    const int b = kPairs[k][1];
    const __m256d dot = _mm256_fmadd_pd(vi[a], vi[b], _mm256_mul_pd(vr[a], vr[b]));
    const __m256d wedge = _mm256_fmsub_pd(vr[a], vi[b], _mm256_mul_pd(vi[a], vr[b]));
    cross = _mm256_fmadd_pd(_mm256_set1_pd(form[4 + k]), dot, cross);
    cross = _mm256_fnmadd_pd(_mm256_set1_pd(form[10 + k]), wedge, cross);
  }
  return _mm256_fmadd_pd(_mm256_set1_pd(2.0), cross, q);
}

inline double hmax(__m256d v) {
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, v);
  return std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
}

inline __m256d square(__m256d v) { return _mm256_mul_pd(v, v); }

}  // namespace

void quadratic_forms(const double* form, const double* const* re, const double* const* im,
                     std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) _mm256_storeu_pd(out + i, form4(form, re, im, i));
  if (i < n) {
    const double* tail_re[4];
    const double* tail_im[4];
    for (int j = 0; j < 4; ++j) {
      tail_re[j] = re[j] + i;
      tail_im[j] = im[j] + i;
    }
    scalar::quadratic_forms(form, tail_re, tail_im, n - i, out + i);
  }
}

double max_quadratic_form(const double* form, const double* const* re, const double* const* im,
                          std::size_t n) {
  __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) best = _mm256_max_pd(best, form4(form, re, im, i));
  double result = hmax(best);
  if (i < n) {
    const double* tail_re[4];
    const double* tail_im[4];
    for (int j = 0; j < 4; ++j) {
      tail_re[j] = re[j] + i;
      tail_im[j] = im[j] + i;
    }
    result = std::max(result, scalar::max_quadratic_form(form, tail_re, tail_im, n - i));
  }
  return result;
}

void fef_one_damped(const double* pb, std::size_t n, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d quarter = _mm256_set1_pd(0.25);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d t = _mm256_add_pd(one, _mm256_sqrt_pd(_mm256_sub_pd(one, _mm256_loadu_pd(pb + i))));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(quarter, square(t)));
  }
  scalar::fef_one_damped(pb + i, n - i, out + i);
}

void fef_two_damped_phi(const double* pa, const double* pb, std::size_t n, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d quarter = _mm256_set1_pd(0.25);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d a = _mm256_loadu_pd(pa + i);
    const __m256d b = _mm256_loadu_pd(pb + i);
    const __m256d keep = _mm256_mul_pd(_mm256_sub_pd(one, a), _mm256_sub_pd(one, b));
    const __m256d t = _mm256_add_pd(one, _mm256_sqrt_pd(keep));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(quarter, _mm256_fmadd_pd(a, b, square(t))));
  }
  scalar::fef_two_damped_phi(pa + i, pb + i, n - i, out + i);
}

void fef_two_damped_psi(const double* pa, const double* pb, std::size_t n, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d quarter = _mm256_set1_pd(0.25);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d a = _mm256_loadu_pd(pa + i);
    const __m256d b = _mm256_loadu_pd(pb + i);
    const __m256d f1 = _mm256_mul_pd(quarter, _mm256_add_pd(a, b));
    const __m256d t = _mm256_add_pd(_mm256_sqrt_pd(_mm256_sub_pd(one, a)),
                                    _mm256_sqrt_pd(_mm256_sub_pd(one, b)));
    _mm256_storeu_pd(out + i, _mm256_max_pd(f1, _mm256_mul_pd(quarter, square(t))));
  }
  scalar::fef_two_damped_psi(pa + i, pb + i, n - i, out + i);
}

}  // namespace adcfef::kernels::detail::avx2
