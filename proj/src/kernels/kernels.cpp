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

#include <cstdlib>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "adcfef/error.hpp"
#include "adcfef/kernels.hpp"
#include "kernels_impl.hpp"

namespace adcfef::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(ADCFEF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend resolve_backend() {
  const char* requested = std::getenv("ADCFEF_SIMD");
  if (requested != nullptr) {
    const std::string name(requested);
    if (name == "scalar") return Backend::Scalar;
    if (name == "avx2" && available(Backend::Avx2)) return Backend::Avx2;
  }
  return available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

void require_backend(Backend b) {
  if (!available(b)) {
    throw InvalidArgument(fmt::format("kernel backend '{}' is not available", to_string(b)));
  }
}

struct RawBatch {
  const double* re[4];
  const double* im[4];
  std::size_t n;
};

RawBatch raw(const StateBatch4& s) {
  RawBatch r{};
  r.n = s.size();
  for (int j = 0; j < 4; ++j) {
    if (s.re[j].size() != r.n || s.im[j].size() != r.n) {
      throw DimensionMismatch("StateBatch4: component arrays differ in length");
    }
    r.re[j] = s.re[j].data();
    r.im[j] = s.im[j].data();
  }
  return r;
}

std::array<double, 16> pack(const HermitianForm4& h) {
  std::array<double, 16> f{};
  for (int j = 0; j < 4; ++j) f[j] = h.diag[j];
  for (int k = 0; k < 6; ++k) {
    f[4 + k] = h.off_re[k];
    f[10 + k] = h.off_im[k];
  }
  return f;
}

void require_lengths(std::size_t a, std::size_t b, std::size_t out, const char* op) {
  if (a != out || b != out) {
    throw DimensionMismatch(fmt::format("{}: input lengths {} and {} vs output {}", op, a, b, out));
  }
}

}  // namespace

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

bool available(Backend b) {
  if (b == Backend::Scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  if (available(Backend::Avx2)) out.push_back(Backend::Avx2);
  return out;
}

Backend active_backend() {
  static const Backend chosen = resolve_backend();
  return chosen;
}

HermitianForm4 HermitianForm4::from(const qmat::ComplexMatrix& m) {
  if (m.dim() != 4) throw DimensionMismatch("HermitianForm4: expected a 4x4 matrix");
  HermitianForm4 h;
  int k = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    h.diag[i] = m(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j, ++k) {
      h.off_re[k] = m(i, j).real();
      h.off_im[k] = m(i, j).imag();
    }
  }
  return h;
}

void quadratic_forms(Backend b, const HermitianForm4& h, const StateBatch4& states,
                     std::span<double> out) {
  require_backend(b);
  const RawBatch r = raw(states);
  if (out.size() != r.n) throw DimensionMismatch("quadratic_forms: output length mismatch");
  const auto form = pack(h);
#if defined(ADCFEF_HAVE_AVX2)
  if (b == Backend::Avx2) {
    detail::avx2::quadratic_forms(form.data(), r.re, r.im, r.n, out.data());
    return;
  }
#endif
  detail::scalar::quadratic_forms(form.data(), r.re, r.im, r.n, out.data());
}

double max_quadratic_form(Backend b, const HermitianForm4& h, const StateBatch4& states) {
  require_backend(b);
  const RawBatch r = raw(states);
  const auto form = pack(h);
#if defined(ADCFEF_HAVE_AVX2)
  if (b == Backend::Avx2) return detail::avx2::max_quadratic_form(form.data(), r.re, r.im, r.n);
#endif
  return detail::scalar::max_quadratic_form(form.data(), r.re, r.im, r.n);
}

void fef_one_damped(Backend b, std::span<const double> pb, std::span<double> out) {
  require_backend(b);
  require_lengths(pb.size(), pb.size(), out.size(), "fef_one_damped");
#if defined(ADCFEF_HAVE_AVX2)
  if (b == Backend::Avx2) return detail::avx2::fef_one_damped(pb.data(), pb.size(), out.data());
#endif
  detail::scalar::fef_one_damped(pb.data(), pb.size(), out.data());
}

void fef_two_damped_phi(Backend b, std::span<const double> pa, std::span<const double> pb,
                        std::span<double> out) {
  require_backend(b);
  require_lengths(pa.size(), pb.size(), out.size(), "fef_two_damped_phi");
#if defined(ADCFEF_HAVE_AVX2)
  if (b == Backend::Avx2) {
    return detail::avx2::fef_two_damped_phi(pa.data(), pb.data(), out.size(), out.data());
  }
#endif
  detail::scalar::fef_two_damped_phi(pa.data(), pb.data(), out.size(), out.data());
}

void fef_two_damped_psi(Backend b, std::span<const double> pa, std::span<const double> pb,
                        std::span<double> out) {
  require_backend(b);
  require_lengths(pa.size(), pb.size(), out.size(), "fef_two_damped_psi");
#if defined(ADCFEF_HAVE_AVX2)
  if (b == Backend::Avx2) {
    return detail::avx2::fef_two_damped_psi(pa.data(), pb.data(), out.size(), out.data());
  }
#endif
  detail::scalar::fef_two_damped_psi(pa.data(), pb.data(), out.size(), out.data());
}

}  // namespace adcfef::kernels
