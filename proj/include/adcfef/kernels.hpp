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

// Batched inner loops with a scalar reference and vectorized variants chosen
// at runtime. Every variant must agree with the scalar one to rounding.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "adcfef/qmat.hpp"

namespace adcfef::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);
/// Compiled in and supported by the running CPU.
bool available(Backend b);
std::vector<Backend> available_backends();
/// Widest available backend. The environment variable ADCFEF_SIMD=scalar
/// (or =avx2) overrides the choice; it is read once per process.
Backend active_backend();

/// Upper triangle of a 4x4 Hermitian matrix. Off-diagonal order is
/// (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
struct HermitianForm4 {
  std::array<double, 4> diag{};
  std::array<double, 6> off_re{};
  std::array<double, 6> off_im{};

  static HermitianForm4 from(const qmat::ComplexMatrix& m);
};

/// Structure-of-arrays view of n four-component complex vectors.
struct StateBatch4 {
  std::array<std::span<const double>, 4> re;
  std::array<std::span<const double>, 4> im;

  std::size_t size() const noexcept { return re[0].size(); }
};

/// out[i] = <psi_i| H |psi_i>.
void quadratic_forms(Backend b, const HermitianForm4& h, const StateBatch4& states,
                     std::span<double> out);
/// max_i <psi_i| H |psi_i>; -infinity for an empty batch.
double max_quadratic_form(Backend b, const HermitianForm4& h, const StateBatch4& states);

/// (1 + sqrt(1 - p_b))^2 / 4
void fef_one_damped(Backend b, std::span<const double> pb, std::span<double> out);
/// [p_a p_b + (1 + sqrt((1 - p_a)(1 - p_b)))^2] / 4
void fef_two_damped_phi(Backend b, std::span<const double> pa, std::span<const double> pb,
                        std::span<double> out);
/// max((p_a + p_b)/4, (sqrt(1 - p_a) + sqrt(1 - p_b))^2 / 4)
void fef_two_damped_psi(Backend b, std::span<const double> pa, std::span<const double> pb,
                        std::span<double> out);

}  // namespace adcfef::kernels
