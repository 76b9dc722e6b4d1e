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

#include <array>
#include <optional>
#include <string_view>

#include "adcfef/channels.hpp"
#include "adcfef/fidelity.hpp"
#include "adcfef/qmat.hpp"

namespace adcfef::scenarios {

using channels::DampingStrength;
using fidelity::FefReport;
using qmat::ComplexMatrix;
using qmat::DensityMatrix;

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellKind, 4> kAllBellKinds = {
    BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus};

/// "phi+", "phi-", "psi+", "psi-".
std::string_view to_string(BellKind kind);
/// Case-insensitive inverse of to_string.
std::optional<BellKind> parse_bell_kind(std::string_view name);
/// Phi sources are the parallel-spin states (|00> +- |11>)/sqrt 2.
bool is_phi(BellKind kind);

/// Bob's qubit is damped by p_b first; Alice's by p_a afterwards if present.
struct DampingScenario {
  BellKind source;
  DampingStrength pb;
  std::optional<DampingStrength> pa;
};

struct ScenarioResult {
  DensityMatrix initial;
  DensityMatrix after_b;
  std::optional<DensityMatrix> after_ab;
  FefReport report_one;
  std::optional<FefReport> report_two;
  /// report_two.fef_numeric > report_one.fef_numeric
  std::optional<bool> improved;
};

DensityMatrix bell(BellKind kind);

/// Closed-form FEF of the singly damped state.
fidelity::Fef closed_form_one(const DampingScenario& s);
/// Closed-form FEF of the doubly damped state; nullopt without p_a.
std::optional<fidelity::Fef> closed_form_two(const DampingScenario& s);

ScenarioResult run(const DampingScenario& s);

/// Golden matrix for the scenario, scaled to unit trace: the singly damped
/// Phi/Psi matrices and the doubly damped Psi matrix. Throws
/// NoPrintedCounterpart for doubly damped Phi sources.
ComplexMatrix printed_matrix(const DampingScenario& s);

/// max |pipeline - golden| for the state the scenario ends in.
double printed_matrix_check(const DampingScenario& s);

}  // namespace adcfef::scenarios
