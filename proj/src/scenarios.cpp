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

#include "adcfef/scenarios.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "adcfef/error.hpp"

namespace adcfef::scenarios {

using channels::QubitSite;
using qmat::Complex;

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
  }
  return "unknown";
}

std::optional<BellKind> parse_bell_kind(std::string_view name) {
  std::string lower(name);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (BellKind k : kAllBellKinds) {
    if (lower == to_string(k)) return k;
  }
  return std::nullopt;
}

bool is_phi(BellKind kind) { return kind == BellKind::PhiPlus || kind == BellKind::PhiMinus; }

namespace {

double sign_of(BellKind kind) {
  return (kind == BellKind::PhiPlus || kind == BellKind::PsiPlus) ? 1.0 : -1.0;
}

}  // namespace

DensityMatrix bell(BellKind kind) {
  const double h = std::numbers::sqrt2 / 2.0;
  const double sign = sign_of(kind);
  std::array<Complex, 4> amp{};
  if (is_phi(kind)) {
    amp[0] = h;
    amp[3] = sign * h;
  } else {
    amp[1] = h;
    amp[2] = sign * h;
  }
  return qmat::pure_state(amp);
}

fidelity::Fef closed_form_one(const DampingScenario& s) { return fidelity::fef_one_damped(s.pb); }

std::optional<fidelity::Fef> closed_form_two(const DampingScenario& s) {
  if (!s.pa) return std::nullopt;
  return is_phi(s.source) ? fidelity::fef_two_damped_phi(*s.pa, s.pb)
                          : fidelity::fef_two_damped_psi(*s.pa, s.pb);
}

ScenarioResult run(const DampingScenario& s) {
  const DensityMatrix initial = bell(s.source);
  const auto on_b = channels::extend_to_site(channels::adc(s.pb), QubitSite::B);
  DensityMatrix after_b = channels::apply(on_b, initial);
  FefReport report_one = fidelity::analyze(after_b, closed_form_one(s));

  ScenarioResult result{initial, after_b, std::nullopt, report_one, std::nullopt, std::nullopt};
  if (s.pa) {
    const auto on_a = channels::extend_to_site(channels::adc(*s.pa), QubitSite::A);
    DensityMatrix after_ab = channels::apply(on_a, after_b);
    FefReport report_two = fidelity::analyze(after_ab, closed_form_two(s));
    result.improved = report_two.fef_numeric.value() > report_one.fef_numeric.value();
    result.after_ab = std::move(after_ab);
    result.report_two = report_two;
  }
  return result;
}

ComplexMatrix printed_matrix(const DampingScenario& s) {
  const double sign = sign_of(s.source);
  const double pb = s.pb.value();
  if (!s.pa) {
    const double c = sign * std::sqrt(1.0 - pb);
    // The parallel-spin matrix is printed without its 1/2; both are scaled here.
    const ComplexMatrix printed =
        is_phi(s.source) ? ComplexMatrix{{1.0, 0.0, 0.0, c},
                                         {0.0, 0.0, 0.0, 0.0},
                                         {0.0, 0.0, pb, 0.0},
                                         {c, 0.0, 0.0, 1.0 - pb}}
                         : ComplexMatrix{{pb, 0.0, 0.0, 0.0},
                                         {0.0, 1.0 - pb, c, 0.0},
                                         {0.0, c, 1.0, 0.0},
                                         {0.0, 0.0, 0.0, 0.0}};
    return qmat::scale(printed, 0.5);
  }
  if (is_phi(s.source)) {
    throw NoPrintedCounterpart("printed_matrix: no printed matrix for doubly damped Phi sources");
  }
  const double pa = s.pa->value();
  const double c = sign * std::sqrt((1.0 - pa) * (1.0 - pb));
  return qmat::scale(ComplexMatrix{{pa + pb, 0.0, 0.0, 0.0},
                                   {0.0, 1.0 - pb, c, 0.0},
                                   {0.0, c, 1.0 - pa, 0.0},
                                   {0.0, 0.0, 0.0, 0.0}},
                     0.5);
}

double printed_matrix_check(const DampingScenario& s) {
  const ComplexMatrix golden = printed_matrix(s);
  const ScenarioResult r = run(s);
  const DensityMatrix& state = s.pa ? *r.after_ab : r.after_b;
  return qmat::max_abs_diff(state.matrix(), golden);
}

}  // namespace adcfef::scenarios
