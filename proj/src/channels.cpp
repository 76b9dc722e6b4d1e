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

#include "adcfef/channels.hpp"

#include <cmath>

#include <fmt/format.h>

#include "adcfef/error.hpp"

namespace adcfef::channels {

DampingStrength::DampingStrength(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(fmt::format("damping strength {} outside [0, 1]", p));
  }
}

std::string_view to_string(QubitSite site) { return site == QubitSite::A ? "A" : "B"; }

double completeness_residual(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) throw InvalidArgument("completeness_residual: empty Kraus set");
  ComplexMatrix sum(ops.front().dim());
  for (const auto& k : ops) sum = sum + qmat::adjoint(k) * k;
  return qmat::max_abs_diff(sum, ComplexMatrix::identity(sum.dim()));
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw InvalidArgument("KrausChannel: no Kraus operators");
  for (const auto& k : ops_) {
    if (k.dim() != ops_.front().dim()) {
      throw DimensionMismatch("KrausChannel: Kraus operators differ in dimension");
    }
  }
  const double residual = completeness_residual(ops_);
  if (residual > qmat::kStructureTol) {
    throw InvalidArgument(
        fmt::format("KrausChannel: completeness violated, residual {:.3e}", residual));
  }
}

KrausChannel adc(DampingStrength p) {
  const double keep = std::sqrt(1.0 - p.value());
  const double decay = std::sqrt(p.value());
  return KrausChannel({
      ComplexMatrix{{1.0, 0.0}, {0.0, keep}},
      ComplexMatrix{{0.0, decay}, {0.0, 0.0}},
  });
}

KrausChannel extend_to_site(const KrausChannel& c, QubitSite site) {
  if (c.dim() != 2) {
    throw DimensionMismatch(
        fmt::format("extend_to_site: expected a single-qubit channel, got dimension {}", c.dim()));
  }
  const auto id = ComplexMatrix::identity(2);
  std::vector<ComplexMatrix> lifted;
  lifted.reserve(c.ops().size());
  for (const auto& k : c.ops()) {
    lifted.push_back(site == QubitSite::B ? qmat::tensor(id, k) : qmat::tensor(k, id));
  }
  return KrausChannel(std::move(lifted));
}

DensityMatrix apply(const KrausChannel& c, const DensityMatrix& rho) {
  if (c.dim() != rho.dim()) {
    throw DimensionMismatch(
        fmt::format("apply: channel dimension {} vs state dimension {}", c.dim(), rho.dim()));
  }
  ComplexMatrix out(rho.dim());
  for (const auto& k : c.ops()) out = out + k * rho.matrix() * qmat::adjoint(k);
  return qmat::make_density(out);
}

}  // namespace adcfef::channels
