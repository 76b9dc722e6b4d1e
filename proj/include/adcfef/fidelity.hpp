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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "adcfef/channels.hpp"
#include "adcfef/qmat.hpp"

namespace adcfef::fidelity {

using channels::DampingStrength;
using qmat::DensityMatrix;

/// Usefulness threshold on the fully entangled fraction.
inline constexpr double kTeleportThreshold = 0.5;
/// Guard band around strict-inequality thresholds.
inline constexpr double kThresholdGuard = 1e-12;

/// Fully entangled fraction, a value in [0, 1].
class Fef {
 public:
  /// Accepts values within 1e-9 of [0, 1] and clamps them into range.
  explicit Fef(double value);
  double value() const noexcept { return value_; }
  friend auto operator<=>(const Fef&, const Fef&) = default;

 private:
  double value_;
};

enum class Usefulness { Teleporting, Boundary, NonTeleporting };

std::string_view to_string(Usefulness u);
/// Teleporting when f > 1/2 + guard, non-teleporting when f < 1/2 - guard.
Usefulness classify(Fef f);

struct FefReport {
  Fef fef_numeric;
  std::optional<Fef> fef_closed;
  /// |fef_numeric - fef_closed| when a closed form was supplied.
  std::optional<double> closed_residual;
  double teleport_fidelity;
  Usefulness usefulness;
  bool is_teleporting;
  bool directly_distillable;
};

/// max over maximally entangled |psi> of <psi|rho|psi>, as the largest
/// eigenvalue of Re(Q^dagger rho Q) with Q the magic basis
/// {|Phi+>, i|Phi->, i|Psi+>, |Psi->}.
Fef fef_numeric(const DensityMatrix& rho);

/// Sampling lower bound on the FEF: the best of `samples` states
/// (U (x) I)|Phi+> with U Haar-random in U(2). Deterministic for a given
/// seed; throws InvalidArgument for samples == 0.
Fef fef_oracle(const DensityMatrix& rho, std::uint64_t samples, std::uint64_t seed);

/// Bell state with one qubit damped by p (any of the four sources).
Fef fef_one_damped(DampingStrength p);
/// Phi source, both qubits damped by the same p: 1 - p + p^2/2.
Fef fef_two_damped_phi_equal(DampingStrength p);
/// Psi source, both qubits damped by the same p: max(1 - p, p/2).
Fef fef_two_damped_psi_equal(DampingStrength p);
/// Phi source, Bob damped by p_b then Alice by p_a.
Fef fef_two_damped_phi(DampingStrength pa, DampingStrength pb);

/// The two overlaps that compete for the FEF of a doubly damped Psi state.
struct PsiCandidates {
  double phi_overlap;  ///< (p_a + p_b)/4
  double psi_overlap;  ///< (sqrt(1-p_a) + sqrt(1-p_b))^2 / 4
};
PsiCandidates psi_candidates(DampingStrength pa, DampingStrength pb);
/// max of the two candidates.
Fef fef_two_damped_psi(DampingStrength pa, DampingStrength pb);

/// (2f + 1)/3
double teleportation_fidelity(Fef f);

/// p_b at which a singly damped Bell state stops being teleporting: 2 sqrt 2 - 2.
double teleport_threshold_p();

/// g(p_b) = 4[sqrt(1-p_b)(2p_b-1) - (1-p_b)] / (2p_b-1)^2, nullopt at p_b = 1/2.
///
/// The expression is the squared form of the improvement condition and is
/// only the true boundary for p_b <= sqrt(3)/2; see improvement_limit().
std::optional<double> improvement_bound_g(DampingStrength pb);

/// Supremum of the p_a values for which damping Alice's qubit raises the FEF
/// of a Phi-derived state: 0 for p_b <= 3/4, g(p_b) for 3/4 < p_b <= sqrt(3)/2,
/// and 1 (attained) above sqrt(3)/2.
double improvement_limit(DampingStrength pb);

/// True when fef_two_damped_phi(pa, pb) > fef_one_damped(pb), decided from the
/// factored form (1 - u)[(1 + u)(2p_b - 1) - 2 sqrt(1 - p_b)] > 0 with
/// u = sqrt(1 - p_a).
bool repair_improves(DampingStrength pa, DampingStrength pb);

/// p_a maximizing fef_two_damped_phi at fixed p_b: p_b(4p_b-3)/(2p_b-1)^2.
/// Throws NoImprovementPossible for p_b < 3/4.
DampingStrength optimal_pa(DampingStrength pb);

/// p_b^2 / (2(2p_b - 1)). Throws NoImprovementPossible for p_b < 3/4.
Fef fef_max_after_repair(DampingStrength pb);

/// Root in (1/2, 1) of 1 - p + p^2/2 = (1 + sqrt(1 - p))^2/4 by bisection.
double crossover_equal_damping();

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

FefReport analyze(const DensityMatrix& rho, std::optional<Fef> closed_form = std::nullopt);

/// Batched closed forms on the active kernel backend.
void fef_one_damped_batch(std::span<const double> pb, std::span<double> out);
void fef_two_damped_phi_batch(std::span<const double> pa, std::span<const double> pb,
                              std::span<double> out);
void fef_two_damped_psi_batch(std::span<const double> pa, std::span<const double> pb,
                              std::span<double> out);

}  // namespace adcfef::fidelity
