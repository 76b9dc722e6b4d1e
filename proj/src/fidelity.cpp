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

#include "adcfef/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <fmt/format.h>

#include "adcfef/error.hpp"
#include "adcfef/kernels.hpp"

namespace adcfef::fidelity {

using qmat::Complex;
using qmat::ComplexMatrix;

namespace {

constexpr double kFefSlack = 1e-9;
constexpr double kRepairFloor = 0.75;
constexpr std::size_t kOracleBlock = 4096;

// Columns |Phi+>, i|Phi->, i|Psi+>, |Psi-> in the |00>,|01>,|10>,|11> basis.
const ComplexMatrix& magic_basis() {
  static const ComplexMatrix q = [] {
    const double h = std::numbers::sqrt2 / 2.0;
    const Complex i{0.0, h};
    return ComplexMatrix{
        {h, i, 0.0, 0.0},
        {0.0, 0.0, i, h},
        {0.0, 0.0, i, -h},
        {h, -i, 0.0, 0.0},
    };
  }();
  return q;
}

void require_two_qubit(const DensityMatrix& rho, const char* op) {
  if (rho.dim() != 4) {
    throw DimensionMismatch(fmt::format("{}: expected a two-qubit state, got dimension {}", op,
                                        rho.dim()));
  }
}

double phi_closed(double pa, double pb) {
  const double t = 1.0 + std::sqrt((1.0 - pa) * (1.0 - pb));
  return 0.25 * (pa * pb + t * t);
}

double one_damped_closed(double p) {
  const double t = 1.0 + std::sqrt(1.0 - p);
  return 0.25 * t * t;
}

void require_repairable(DampingStrength pb, const char* op) {
  if (pb.value() < kRepairFloor) {
    throw NoImprovementPossible(
        fmt::format("{}: p_b = {} is below 3/4, damping Alice's qubit cannot help", op,
                    pb.value()));
  }
}

}  // namespace

Fef::Fef(double value) : value_(value) {
  if (!(value >= -kFefSlack && value <= 1.0 + kFefSlack)) {
    throw InvalidArgument(fmt::format("fully entangled fraction {} outside [0, 1]", value));
  }
  value_ = std::clamp(value, 0.0, 1.0);
}

std::string_view to_string(Usefulness u) {
  switch (u) {
    case Usefulness::Teleporting: return "teleporting";
    case Usefulness::Boundary: return "boundary";
    case Usefulness::NonTeleporting: return "non-teleporting";
  }
  return "unknown";
}

Usefulness classify(Fef f) {
  if (f.value() > kTeleportThreshold + kThresholdGuard) return Usefulness::Teleporting;
  if (f.value() < kTeleportThreshold - kThresholdGuard) return Usefulness::NonTeleporting;
  return Usefulness::Boundary;
}

Fef fef_numeric(const DensityMatrix& rho) {
  require_two_qubit(rho, "fef_numeric");
  const ComplexMatrix& q = magic_basis();
  const ComplexMatrix m = qmat::adjoint(q) * rho.matrix() * q;
  std::vector<Complex> re(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) re[i * 4 + j] = 0.5 * (m(i, j).real() + m(j, i).real());
  return Fef(qmat::hermitian_eigen(ComplexMatrix(4, std::move(re))).eigenvalues.front());
}

Fef fef_oracle(const DensityMatrix& rho, std::uint64_t samples, std::uint64_t seed) {
  require_two_qubit(rho, "fef_oracle");
  if (samples == 0) throw InvalidArgument("fef_oracle: samples must be positive");

  const auto form = kernels::HermitianForm4::from(rho.matrix());
  const auto backend = kernels::active_backend();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  std::array<std::vector<double>, 4> re, im;
  for (int j = 0; j < 4; ++j) {
    re[j].resize(kOracleBlock);
    im[j].resize(kOracleBlock);
  }
  const double h = std::numbers::sqrt2 / 2.0;
  double best = -1.0;
  std::uint64_t remaining = samples;
  while (remaining > 0) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, kOracleBlock));
    for (std::size_t i = 0; i < n; ++i) {
      // Haar measure on U(2): sin^2 of the mixing angle is uniform.
      const double mix = std::asin(std::sqrt(unit(rng)));
      const double psi = angle(rng);
      const double chi = angle(rng);
      const double phase = angle(rng);
      const double c = h * std::cos(mix);
      const double s = h * std::sin(mix);
      // (U (x) I)|Phi+> has amplitudes U_ij / sqrt(2) on |ij>.
      const std::array<Complex, 4> amp = {
          std::polar(c, phase + psi),
          std::polar(s, phase + chi),
          -std::polar(s, phase - chi),
          std::polar(c, phase - psi),
      };
      for (int j = 0; j < 4; ++j) {
        re[j][i] = amp[j].real();
        im[j][i] = amp[j].imag();
      }
    }
    kernels::StateBatch4 batch;
    for (int j = 0; j < 4; ++j) {
      batch.re[j] = std::span<const double>(re[j].data(), n);
      batch.im[j] = std::span<const double>(im[j].data(), n);
    }
    best = std::max(best, kernels::max_quadratic_form(backend, form, batch));
    remaining -= n;
  }
  return Fef(best);
}

Fef fef_one_damped(DampingStrength p) { return Fef(one_damped_closed(p.value())); }

Fef fef_two_damped_phi_equal(DampingStrength p) {
  const double x = p.value();
  return Fef(1.0 - x + 0.5 * x * x);
}

Fef fef_two_damped_psi_equal(DampingStrength p) {
  const double x = p.value();
  return Fef(std::max(1.0 - x, 0.5 * x));
}

Fef fef_two_damped_phi(DampingStrength pa, DampingStrength pb) {
  return Fef(phi_closed(pa.value(), pb.value()));
}

PsiCandidates psi_candidates(DampingStrength pa, DampingStrength pb) {
  const double t = std::sqrt(1.0 - pa.value()) + std::sqrt(1.0 - pb.value());
  return {0.25 * (pa.value() + pb.value()), 0.25 * t * t};
}

Fef fef_two_damped_psi(DampingStrength pa, DampingStrength pb) {
  const auto c = psi_candidates(pa, pb);
  return Fef(std::max(c.phi_overlap, c.psi_overlap));
}

double teleportation_fidelity(Fef f) { return (2.0 * f.value() + 1.0) / 3.0; }

double teleport_threshold_p() { return 2.0 * std::numbers::sqrt2 - 2.0; }

std::optional<double> improvement_bound_g(DampingStrength pb) {
  const double p = pb.value();
  const double a = 2.0 * p - 1.0;
  if (a == 0.0) return std::nullopt;
  return 4.0 * (std::sqrt(1.0 - p) * a - (1.0 - p)) / (a * a);
}

double improvement_limit(DampingStrength pb) {
  const double p = pb.value();
  if (p <= kRepairFloor) return 0.0;
  const double a = 2.0 * p - 1.0;
  const double s = std::sqrt(1.0 - p);
  if (2.0 * s >= a) return std::min(1.0, *improvement_bound_g(pb));
  return 1.0;
}

bool repair_improves(DampingStrength pa, DampingStrength pb) {
  const double u = std::sqrt(1.0 - pa.value());
  const double p = pb.value();
  return (1.0 - u) * ((1.0 + u) * (2.0 * p - 1.0) - 2.0 * std::sqrt(1.0 - p)) > 0.0;
}

DampingStrength optimal_pa(DampingStrength pb) {
  require_repairable(pb, "optimal_pa");
  const double p = pb.value();
  const double a = 2.0 * p - 1.0;
  return DampingStrength(std::clamp(p * (4.0 * p - 3.0) / (a * a), 0.0, 1.0));
}

Fef fef_max_after_repair(DampingStrength pb) {
  require_repairable(pb, "fef_max_after_repair");
  const double p = pb.value();
  return Fef(p * p / (2.0 * (2.0 * p - 1.0)));
}

double crossover_equal_damping() {
  const auto gap = [](double p) { return (1.0 - p + 0.5 * p * p) - one_damped_closed(p); };
  double lo = 0.5;
  double hi = 1.0;
  if (!(gap(lo) < 0.0 && gap(hi) > 0.0)) {
    throw ConvergenceFailure("crossover_equal_damping: bracket does not straddle the root");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence");
  const ComplexMatrix yy = ComplexMatrix{
      {0.0, 0.0, 0.0, -1.0},
      {0.0, 0.0, 1.0, 0.0},
      {0.0, 1.0, 0.0, 0.0},
      {-1.0, 0.0, 0.0, 0.0},
  };
  const ComplexMatrix flipped = yy * qmat::conjugate(rho.matrix()) * yy;
  const ComplexMatrix root = qmat::psd_sqrt(rho.matrix());
  const ComplexMatrix r = root * flipped * root;
  const ComplexMatrix herm = qmat::scale(r + qmat::adjoint(r), 0.5);
  const auto eig = qmat::hermitian_eigen(herm).eigenvalues;
  // Eigenvalues of R sit at the rounding floor for rank-deficient states; the
  // square root would blow that up to ~1e-8, so treat them as exact zeros.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(eig[0], 1e-300);
  std::array<double, 4> lambda{};
  for (std::size_t i = 0; i < 4; ++i) lambda[i] = eig[i] > floor ? std::sqrt(eig[i]) : 0.0;
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

FefReport analyze(const DensityMatrix& rho, std::optional<Fef> closed_form) {
  const Fef f = fef_numeric(rho);
  const Usefulness u = classify(f);
  std::optional<double> residual;
  if (closed_form) residual = std::abs(f.value() - closed_form->value());
  const bool teleporting = u == Usefulness::Teleporting;
  return FefReport{f, closed_form, residual, teleportation_fidelity(f), u, teleporting, teleporting};
}

void fef_one_damped_batch(std::span<const double> pb, std::span<double> out) {
  kernels::fef_one_damped(kernels::active_backend(), pb, out);
}

void fef_two_damped_phi_batch(std::span<const double> pa, std::span<const double> pb,
                              std::span<double> out) {
  kernels::fef_two_damped_phi(kernels::active_backend(), pa, pb, out);
}

void fef_two_damped_psi_batch(std::span<const double> pa, std::span<const double> pb,
                              std::span<double> out) {
  kernels::fef_two_damped_psi(kernels::active_backend(), pa, pb, out);
}

}  // namespace adcfef::fidelity
