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

#include <cstddef>

namespace adcfef::kernels::detail {

// Raw-pointer entry points shared by every backend. `form` is the 16-double
// packing diag[4], off_re[6], off_im[6]; `re`/`im` point at four arrays of n.
#define ADCFEF_KERNEL_DECLS                                                                    \
  void quadratic_forms(const double* form, const double* const* re, const double* const* im, \
                       std::size_t n, double* out);                                           \
  double max_quadratic_form(const double* form, const double* const* re,                     \
                            const double* const* im, std::size_t n);                         \
  void fef_one_damped(const double* pb, std::size_t n, double* out);                         \
  void fef_two_damped_phi(const double* pa, const double* pb, std::size_t n, double* out);   \
  void fef_two_damped_psi(const double* pa, const double* pb, std::size_t n, double* out);

namespace scalar {
ADCFEF_KERNEL_DECLS
}

#if defined(ADCFEF_HAVE_AVX2)
namespace avx2 {
ADCFEF_KERNEL_DECLS
}
#endif

#undef ADCFEF_KERNEL_DECLS

}  // namespace adcfef::kernels::detail
