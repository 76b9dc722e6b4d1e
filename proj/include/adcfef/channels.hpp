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

#include <span>
#include <string_view>
#include <vector>

#include "adcfef/qmat.hpp"

namespace adcfef::channels {

using qmat::ComplexMatrix;
using qmat::DensityMatrix;

/// Damping probability p in [0, 1].
class DampingStrength {
 public:
  explicit DampingStrength(double p);
  double value() const noexcept { return p_; }
  friend auto operator<=>(const DampingStrength&, const DampingStrength&) = default;

 private:
  double p_;
};

/// A is Alice's qubit (left tensor factor), B is Bob's transmitted qubit.
enum class QubitSite { A, B };

std::string_view to_string(QubitSite site);

/// Kraus set with sum_i K_i^dagger K_i = I to within 1e-12.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> ops);

  std::span<const ComplexMatrix> ops() const noexcept { return ops_; }
  std::size_t dim() const noexcept { return ops_.front().dim(); }

 private:
  std::vector<ComplexMatrix> ops_;
};

/// max |sum_i K_i^dagger K_i - I|.
double completeness_residual(std::span<const ComplexMatrix> ops);

/// Amplitude damping: K1 = diag(1, sqrt(1-p)), K2 = sqrt(p)|0><1|.
/// Both operators are kept even when p = 0.
KrausChannel adc(DampingStrength p);

/// Lifts a single-qubit channel to two qubits: site B gives I (x) K_i,
/// site A gives K_i (x) I.
KrausChannel extend_to_site(const KrausChannel& c, QubitSite site);

/// sum_i K_i rho K_i^dagger, revalidated.
DensityMatrix apply(const KrausChannel& c, const DensityMatrix& rho);

}  // namespace adcfef::channels
