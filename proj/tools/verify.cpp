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

// Golden-value and invariant suite behind `adcfef verify`.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "adcfef/channels.hpp"
#include "adcfef/fidelity.hpp"
#include "adcfef/scenarios.hpp"
#include "cli.hpp"

namespace adcfef::cli {

using channels::DampingStrength;
using channels::QubitSite;
using qmat::Complex;
using qmat::ComplexMatrix;
using scenarios::BellKind;
using scenarios::DampingScenario;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> grid(std::size_t points) {
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return out;
}

DampingScenario one(BellKind k, double pb) { return {k, DampingStrength(pb), std::nullopt}; }
DampingScenario two(BellKind k, double pa, double pb) {
  return {k, DampingStrength(pb), DampingStrength(pa)};
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& o) : options_(o) {}

  std::vector<VerificationOutcome> run() {
    printed_values();
    one_damped_closed_form();
    teleport_threshold();
    equal_damping_closed_forms();
    crossover();
    improvement_region();
    optimal_repair();
    psi_no_repair();
    oracle_consistency();
    channel_sanity();
    printed_matrices();
    entanglement_monotonicity();
    return std::move(rows_);
  }

 private:
  void add(std::string name, double expected, double computed, double tol) {
    rows_.push_back(make_outcome(std::move(name), expected, computed, tol));
  }

  void printed_values() {
    add("damping operator K2(p=1) entry (0,1)", 1.0, channels::adc(DampingStrength(1.0)).ops()[1](0, 1).real(),
        0.0);

    const double p = 0.3;
    const double k = std::sqrt(1.0 - p);
    const double d = std::sqrt(p);
    const ComplexMatrix w0 = ComplexMatrix::diagonal({1.0, k, 1.0, k});
    ComplexMatrix w1(4);
    w1.set(0, 1, d);
    w1.set(2, 3, d);
    const auto lifted = channels::extend_to_site(channels::adc(DampingStrength(p)), QubitSite::B);
    add("Bob-site operators I (x) K_i at p=0.3", 0.0,
        std::max(qmat::max_abs_diff(lifted.ops()[0], w0), qmat::max_abs_diff(lifted.ops()[1], w1)),
        1e-15);

    ComplexMatrix phi(4), psi(4);
    for (auto [i, j] : {std::pair{0, 0}, {0, 3}, {3, 0}, {3, 3}}) phi.set(i, j, 0.5);
    psi.set(1, 1, 0.5);
    psi.set(2, 2, 0.5);
    psi.set(1, 2, -0.5);
    psi.set(2, 1, -0.5);
    add("|Phi+><Phi+| entries", 0.0,
        qmat::max_abs_diff(scenarios::bell(BellKind::PhiPlus).matrix(), phi), 1e-15);
    add("|Psi-><Psi-| entries", 0.0,
        qmat::max_abs_diff(scenarios::bell(BellKind::PsiMinus).matrix(), psi), 1e-15);

    add("one-damped f(2sqrt2-2) = 1/2",
        0.5, fidelity::fef_one_damped(DampingStrength(fidelity::teleport_threshold_p())).value(),
        1e-12);
    const auto branch = scenarios::run(two(BellKind::PsiPlus, 2.0 / 3.0, 2.0 / 3.0));
    add("Psi equal-damping branch point p=2/3 (pipeline)", 1.0 / 3.0, branch.report_two->fef_numeric.value(),
        1e-9);
    add("bound g(3/4) = 0", 0.0, fidelity::improvement_bound_g(DampingStrength(0.75)).value(),
        1e-12);
    add("optimal p_a(3/4) = 0", 0.0, fidelity::optimal_pa(DampingStrength(0.75)).value(),
        1e-12);
    add("f_max(0.9) = 0.50625", 0.50625,
        fidelity::fef_max_after_repair(DampingStrength(0.9)).value(), 1e-12);
    add("crossover vs printed 0.80585", 0.80585, fidelity::crossover_equal_damping(), 5e-6);
  }

  // Criterion 1
  void one_damped_closed_form() {
    for (BellKind k : scenarios::kAllBellKinds) {
      double worst = 0.0;
      for (int i = 0; i <= 10; ++i) {
        const double p = i / 10.0;
        const auto r = scenarios::run(one(k, p));
        worst = std::max(worst, std::abs(r.report_one.fef_numeric.value() -
                                         fidelity::fef_one_damped(DampingStrength(p)).value()));
      }
      add(fmt::format("C1 one-damped FEF = closed form, {}", scenarios::to_string(k)), 0.0, worst, 1e-9);
    }
  }

  // Criterion 2
  void teleport_threshold() {
    const double t = fidelity::teleport_threshold_p();
    int wrong = 0;
    for (BellKind k : scenarios::kAllBellKinds) {
      const auto below = scenarios::run(one(k, t - 1e-6));
      const auto above = scenarios::run(one(k, t + 1e-6));
      wrong += below.report_one.is_teleporting ? 0 : 1;
      wrong += above.report_one.usefulness == fidelity::Usefulness::NonTeleporting ? 0 : 1;
    }
    add("C2 teleporting flips at 2sqrt2-2 +- 1e-6 (misclassified)", 0.0, wrong, 0.0);
  }

  // Criterion 3
  void equal_damping_closed_forms() {
    for (BellKind k : scenarios::kAllBellKinds) {
      double worst = 0.0;
      for (double p : grid(101)) {
        const auto r = scenarios::run(two(k, p, p));
        const double closed = scenarios::is_phi(k)
                                  ? fidelity::fef_two_damped_phi_equal(DampingStrength(p)).value()
                                  : fidelity::fef_two_damped_psi_equal(DampingStrength(p)).value();
        worst = std::max(worst, std::abs(r.report_two->fef_numeric.value() - closed));
      }
      add(fmt::format("C3 equal damping = {}, {}", scenarios::is_phi(k) ? "phi closed form" : "psi closed form",
                      scenarios::to_string(k)),
          0.0, worst, 1e-9);
    }
  }

  // Criterion 4
  void crossover() {
    add("C4 crossover root in [0.80580, 0.80590]", 0.80585, fidelity::crossover_equal_damping(),
        5e-5);
  }

  // Criterion 5, stated with the bound g, plus the exact boundary.
  void improvement_region() {
    add("C5 g(3/4) = 0", 0.0, fidelity::improvement_bound_g(DampingStrength(0.75)).value(), 1e-12);
    for (double pb : {0.8, 0.9, 0.95}) {
      const DampingStrength b(pb);
      const double g = *fidelity::improvement_bound_g(b);
      const double before = fidelity::fef_one_damped(b).value();
      int misses = 0;
      for (double frac : {0.25, 0.5, 0.75}) {
        const double after = fidelity::fef_two_damped_phi(DampingStrength(g * frac), b).value();
        misses += after > before ? 0 : 1;
      }
      add(fmt::format("C5 repaired > one-damped FEF below g, p_b={} (misses)", pb), 0.0, misses, 0.0);
      const double pa = std::min(1.0, g * 1.05);
      if (pa > g) {
        const double excess = fidelity::fef_two_damped_phi(DampingStrength(pa), b).value() - before;
        add(fmt::format("C5 repaired <= one-damped FEF at min(1, 1.05 g), p_b={} (excess)", pb), 0.0,
            std::max(0.0, excess), 0.0);
      }
    }

    // The exact boundary: below sqrt(3)/2 it is g, above it every p_a > 0 helps.
    int wrong = 0;
    for (double pb : grid(201)) {
      const DampingStrength b(pb);
      const double limit = fidelity::improvement_limit(b);
      const double before = fidelity::fef_one_damped(b).value();
      for (double pa : grid(201)) {
        if (pa == 0.0 || std::abs(pa - limit) < 1e-9) continue;
        const bool inside = pa < limit || (limit == 1.0 && pb > 0.75);
        const bool improved = fidelity::fef_two_damped_phi(DampingStrength(pa), b).value() > before;
        wrong += inside == improved ? 0 : 1;
      }
    }
    add("S5 exact improvement region (misclassified grid points)", 0.0, wrong, 0.0);
  }

  // Criterion 6
  void optimal_repair() {
    int not_above_half = 0;
    for (double pb : {0.76, 0.8, 0.85, 0.9, 0.95, 0.99}) {
      const DampingStrength b(pb);
      const double at_opt = fidelity::fef_two_damped_phi(fidelity::optimal_pa(b), b).value();
      const double fmax = fidelity::fef_max_after_repair(b).value();
      add(fmt::format("C6 repaired FEF at optimal p_a = f_max, p_b={}", pb), fmax, at_opt, 1e-12);
      not_above_half += fmax > 0.5 ? 0 : 1;
    }
    add("C6 f_max > 1/2 (violations)", 0.0, not_above_half, 0.0);
  }

  // Criterion 7
  void psi_no_repair() {
    int counterexamples = 0;
    for (BellKind k : {BellKind::PsiPlus, BellKind::PsiMinus}) {
      for (double pb : grid(201)) {
        const auto base = scenarios::run(one(k, pb));
        const bool was_teleporting = base.report_one.is_teleporting;
        const auto on_a = [&](double pa) {
          return channels::extend_to_site(channels::adc(DampingStrength(pa)), QubitSite::A);
        };
        for (double pa : grid(201)) {
          const auto after = fidelity::fef_numeric(channels::apply(on_a(pa), base.after_b));
          if (!was_teleporting && fidelity::classify(after) == fidelity::Usefulness::Teleporting) {
            ++counterexamples;
          }
        }
      }
    }
    add("C7 Psi sources made teleporting (201x201 grid)", 0.0, counterexamples, 0.0);
  }

  // Criterion 8
  void oracle_consistency() {
    std::mt19937_64 rng(options_.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> kind(0, 3);
    double worst_gap = 0.0;
    double worst_excess = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto k = scenarios::kAllBellKinds[kind(rng)];
      const double pb = unit(rng);
      const double pa = unit(rng);
      const auto r = scenarios::run(two(k, pa, pb));
      const double exact = r.report_two->fef_numeric.value();
      const double sampled =
          fidelity::fef_oracle(*r.after_ab, options_.samples, options_.seed + 1 + i).value();
      worst_gap = std::max(worst_gap, std::abs(sampled - exact));
      worst_excess = std::max(worst_excess, sampled - exact);
    }
    add(fmt::format("C8 |oracle - numeric| over 20 states, {} samples", options_.samples), 0.0,
        worst_gap, 5e-4);
    add("C8 oracle never exceeds numeric (excess)", 0.0, std::max(0.0, worst_excess), 1e-9);
  }

  // Criterion 9
  void channel_sanity() {
    std::mt19937_64 rng(options_.seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double trace_err = 0.0;
    double negativity = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
      std::array<Complex, 4> amp;
      double norm = 0.0;
      for (auto& a : amp) {
        a = {gauss(rng), gauss(rng)};
        norm += std::norm(a);
      }
      for (auto& a : amp) a /= std::sqrt(norm);
      const auto site = unit(rng) < 0.5 ? QubitSite::A : QubitSite::B;
      const auto c = channels::extend_to_site(channels::adc(DampingStrength(unit(rng))), site);
      try {
        const auto out = channels::apply(c, qmat::pure_state(amp));
        trace_err = std::max(trace_err, std::abs(qmat::trace(out.matrix()) - 1.0));
        negativity =
            std::max(negativity, -qmat::hermitian_eigen(out.matrix()).eigenvalues.back());
      } catch (const DensityViolation&) {
        trace_err = kInf;
      }
    }
    add("C9 trace preservation, 1e4 trials", 0.0, trace_err, 1e-12);
    add("C9 positivity, 1e4 trials (most negative eigenvalue)", 0.0, std::max(0.0, negativity),
        1e-10);
    double completeness = 0.0;
    for (double p : grid(1001)) {
      completeness = std::max(completeness, channels::completeness_residual(
                                                channels::adc(DampingStrength(p)).ops()));
    }
    add("C9 Kraus completeness, 1001-point grid", 0.0, completeness, 1e-15);
  }

  // Criterion 10
  void printed_matrices() {
    double worst = 0.0;
    for (BellKind k : scenarios::kAllBellKinds)
      for (double p : {0.1, 0.3, 0.5, 0.7, 0.9})
        worst = std::max(worst, scenarios::printed_matrix_check(one(k, p)));
    add("C10 one-damped states = printed matrices (x 1/2 for Phi)", 0.0, worst, 1e-12);

    worst = 0.0;
    for (BellKind k : {BellKind::PsiPlus, BellKind::PsiMinus})
      for (auto [pa, pb] : {std::pair{0.2, 0.4}, {0.0, 0.7}, {0.5, 0.5}, {0.9, 0.1}, {1.0, 0.3}})
        worst = std::max(worst, scenarios::printed_matrix_check(two(k, pa, pb)));
    add("C10 two-damped Psi states = printed matrix x 1/2", 0.0, worst, 1e-12);
  }

  // Criterion 11 (51x51 grid here; the acceptance suite runs 201x201)
  void entanglement_monotonicity() {
    double worst = 0.0;
    for (BellKind k : scenarios::kAllBellKinds) {
      for (double pb : grid(51)) {
        const auto base = scenarios::run(one(k, pb));
        const double c_one = fidelity::concurrence(base.after_b);
        for (double pa : grid(51)) {
          const auto on_a =
              channels::extend_to_site(channels::adc(DampingStrength(pa)), QubitSite::A);
          const double c_two = fidelity::concurrence(channels::apply(on_a, base.after_b));
          worst = std::max(worst, c_two - c_one);
        }
      }
    }
    add("C11 concurrence increase under second damping (51x51)", 0.0, std::max(0.0, worst), 1e-10);

    const auto r = scenarios::run(two(BellKind::PhiPlus, 0.84375, 0.9));
    const bool paradox = *r.improved && fidelity::concurrence(*r.after_ab) <=
                                            fidelity::concurrence(r.after_b) + 1e-10;
    add("C11 FEF rises while concurrence does not (phi+, 0.9, 0.84375)", 1.0, paradox ? 1.0 : 0.0,
        0.0);
  }

  VerifyOptions options_;
  std::vector<VerificationOutcome> rows_;
};

}  // namespace

VerificationOutcome make_outcome(std::string name, double expected, double computed,
                                 double tolerance) {
  const bool pass = std::abs(expected - computed) <= tolerance;
  return {std::move(name), expected, computed, tolerance, pass};
}

std::vector<VerificationOutcome> run_verification(const VerifyOptions& options) {
  return Suite(options).run();
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  const auto rows = run_verification(options);
  std::size_t passed = 0;
  fmt::print(out, "{:<6}{:<66}{:>16}{:>16}{:>10}\n", "", "check", "expected", "computed", "tol");
  for (const auto& r : rows) {
    passed += r.pass ? 1 : 0;
    fmt::print(out, "{:<6}{:<66}{:>16.10g}{:>16.10g}{:>10.1e}{}\n", r.pass ? "PASS" : "FAIL", r.name,
               r.expected, r.computed, r.tolerance, r.pass ? "" : "   <<<");
  }
  fmt::print(out, "\n{}/{} checks passed\n", passed, rows.size());
  return passed == rows.size() ? kExitOk : kExitVerifyFailed;
}

}  // namespace adcfef::cli
