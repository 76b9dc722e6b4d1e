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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "adcfef/fidelity.hpp"

namespace adcfef::cli {

using channels::DampingStrength;
using scenarios::BellKind;

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw UsageError(fmt::format("invalid {} '{}'", what, text));
  }
  return value;
}

void require_probability(double p, std::string_view what) {
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError(fmt::format("{} = {} is outside [0, 1]", what, p));
}

std::string fmt12(double x) { return fmt::format("{:.12g}", x); }
std::string_view yes_no(bool b) { return b ? "true" : "false"; }

SweepRow evaluate(BellKind source, double pb, std::optional<double> pa) {
  scenarios::DampingScenario s{source, DampingStrength(pb), std::nullopt};
  if (pa) s.pa = DampingStrength(*pa);
  const auto r = scenarios::run(s);
  SweepRow row{source,
               pb,
               pa,
               r.report_one.fef_numeric.value(),
               std::nullopt,
               r.report_one.teleport_fidelity,
               std::nullopt,
               r.improved,
               r.report_one.is_teleporting,
               std::nullopt};
  if (r.report_two) {
    row.f_two = r.report_two->fef_numeric.value();
    row.fidelity_two = r.report_two->teleport_fidelity;
    row.teleporting_two = r.report_two->is_teleporting;
  }
  return row;
}

void print_matrix(std::ostream& out, const qmat::ComplexMatrix& m) {
  bool complex_entries = false;
  for (const auto& z : m.entries()) complex_entries = complex_entries || z.imag() != 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto z = m(i, j);
      // Avoid printing -0.000000 for tiny negative rounding noise.
      const double re = std::abs(z.real()) < 5e-7 ? 0.0 : z.real();
      if (complex_entries) {
        const double im = std::abs(z.imag()) < 5e-7 ? 0.0 : z.imag();
        fmt::print(out, " {:9.6f}{:+.6f}i", re, im);
      } else {
        fmt::print(out, " {:9.6f}", re);
      }
    }
    out << " ]\n";
  }
}

void print_report(std::ostream& out, std::string_view label, const fidelity::FefReport& r) {
  fmt::print(out, "{}:\n", label);
  fmt::print(out, "  FEF numeric            {:.6f}\n", r.fef_numeric.value());
  if (r.fef_closed) {
    fmt::print(out, "  FEF closed form        {:.6f}\n", r.fef_closed->value());
    fmt::print(out, "  |numeric - closed|     {:.3e}\n", *r.closed_residual);
  }
  fmt::print(out, "  teleportation fidelity {:.6f}\n", r.teleport_fidelity);
  fmt::print(out, "  classification         {}\n", fidelity::to_string(r.usefulness));
  fmt::print(out, "  directly distillable   {}\n", r.directly_distillable ? "yes" : "no");
}

}  // namespace

std::vector<double> Range::points() const {
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::min(start + static_cast<double>(i) * step, stop);
  return out;
}

Range parse_range(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos ||
      text.find(':', second + 1) != std::string_view::npos) {
    throw UsageError(fmt::format("range '{}' must look like start:stop:step", text));
  }
  Range r{parse_double(text.substr(0, first), "range start"),
          parse_double(text.substr(first + 1, second - first - 1), "range stop"),
          parse_double(text.substr(second + 1), "range step")};
  if (!(r.step > 0.0)) throw UsageError(fmt::format("range '{}': step must be positive", text));
  if (r.start > r.stop) throw UsageError(fmt::format("range '{}': start exceeds stop", text));
  require_probability(r.start, "range start");
  require_probability(r.stop, "range stop");
  return r;
}

void SweepSpec::validate() const {
  switch (mode) {
    case SweepMode::PbOnly:
      if (!pb_range || pa_range) throw UsageError("p_b sweep needs --pb-range and no --pa-range");
      break;
    case SweepMode::PaAtFixedPb:
      if (!pb || !pa_range) throw UsageError("p_a sweep needs --pb and --pa-range");
      require_probability(*pb, "p_b");
      break;
    case SweepMode::Grid:
      if (!pb_range || !pa_range) throw UsageError("grid sweep needs --pb-range and --pa-range");
      break;
  }
}

SweepSpec make_sweep_spec(BellKind source, std::optional<Range> pb_range, std::optional<double> pb,
                          std::optional<Range> pa_range) {
  if (pb_range && pb) throw UsageError("give either --pb or --pb-range, not both");
  SweepSpec spec{source, SweepMode::PbOnly, pb_range, pb, pa_range};
  if (pa_range) spec.mode = pb_range ? SweepMode::Grid : SweepMode::PaAtFixedPb;
  spec.validate();
  return spec;
}

std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  struct Point {
    double pb;
    std::optional<double> pa;
  };
  std::vector<Point> grid;
  switch (spec.mode) {
    case SweepMode::PbOnly:
      for (double pb : spec.pb_range->points()) grid.push_back({pb, std::nullopt});
      break;
    case SweepMode::PaAtFixedPb:
      for (double pa : spec.pa_range->points()) grid.push_back({*spec.pb, pa});
      break;
    case SweepMode::Grid:
      for (double pb : spec.pb_range->points())
        for (double pa : spec.pa_range->points()) grid.push_back({pb, pa});
      break;
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(grid.size(), 1)));

  std::vector<std::optional<SweepRow>> slots(grid.size());
  std::vector<std::exception_ptr> failures(threads);
  const auto work = [&](unsigned worker) {
    try {
      for (std::size_t i = worker; i < grid.size(); i += threads) {
        slots[i] = evaluate(spec.source, grid[i].pb, grid[i].pa);
      }
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::vector<SweepRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(*s);
  return rows;
}

std::string_view csv_header() {
  return "source,p_b,p_a,f_one,f_two,F_one,F_two,improved,teleporting_one,teleporting_two";
}

std::string format_csv_row(const SweepRow& row) {
  const auto opt = [](const std::optional<double>& x) { return x ? fmt12(*x) : std::string(); };
  const auto optb = [](const std::optional<bool>& b) {
    return b ? std::string(yes_no(*b)) : std::string();
  };
  return fmt::format("{},{},{},{},{},{},{},{},{},{}", scenarios::to_string(row.source),
                     fmt12(row.pb), opt(row.pa), fmt12(row.f_one), opt(row.f_two),
                     fmt12(row.fidelity_one), opt(row.fidelity_two), optb(row.improved),
                     yes_no(row.teleporting_one), optb(row.teleporting_two));
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << csv_header() << '\n';
  for (const auto& row : rows) out << format_csv_row(row) << '\n';
}

int cmd_sweep(const SweepSpec& spec, const std::string& path, std::ostream& out,
              std::ostream& err) {
  std::vector<SweepRow> rows;
  try {
    rows = sweep(spec);
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
  if (path == "-") {
    write_csv(out, rows);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    fmt::print(err, "error: cannot open '{}' for writing\n", path);
    return kExitUsage;
  }
  write_csv(file, rows);
  file.close();
  if (!file) {
    fmt::print(err, "error: failed writing '{}'\n", path);
    return kExitUsage;
  }
  fmt::print(out, "wrote {} rows to {}\n", rows.size(), path);
  return kExitOk;
}

int cmd_optimal(double pb, std::ostream& out, std::ostream& err) {
  if (!(pb >= 0.0 && pb <= 1.0)) {
    fmt::print(err, "error: p_b = {} is outside [0, 1]\n", pb);
    return kExitUsage;
  }
  const DampingStrength b(pb);
  const auto before = fidelity::fef_one_damped(b);
  fmt::print(out, "p_b                        {:.6f}\n", pb);
  fmt::print(out, "FEF before repair          {:.6f} ({})\n", before.value(),
             fidelity::to_string(fidelity::classify(before)));
  if (pb < 0.75) {
    fmt::print(out, "no improvement possible (p_b <= 3/4)\n");
    return kExitOk;
  }
  const auto pa = fidelity::optimal_pa(b);
  const auto fmax = fidelity::fef_max_after_repair(b);
  fmt::print(out, "optimal p_a                {:.6f}\n", pa.value());
  fmt::print(out, "f_max                      {:.6f}\n", fmax.value());
  fmt::print(out, "teleportation fidelity     {:.6f}\n", fidelity::teleportation_fidelity(fmax));
  fmt::print(out, "improving p_a up to        {:.6f}\n", fidelity::improvement_limit(b));
  if (pb == 0.75) {
    fmt::print(out, "no improvement possible (p_b <= 3/4): marginal case, optimal p_a = 0 "
                    "leaves the state unchanged\n");
  } else if (fidelity::classify(fmax) != fidelity::Usefulness::Teleporting) {
    fmt::print(out, "repair possible: yes, but f_max = 1/2 is on the teleporting boundary\n");
  } else {
    fmt::print(out, "repair possible: yes (p_b > 3/4)\n");
  }
  return kExitOk;
}

int cmd_inspect(BellKind source, double pb, std::optional<double> pa, std::ostream& out,
                std::ostream& err) {
  if (!(pb >= 0.0 && pb <= 1.0) || (pa && !(*pa >= 0.0 && *pa <= 1.0))) {
    fmt::print(err, "error: damping strengths must lie in [0, 1]\n");
    return kExitUsage;
  }
  scenarios::DampingScenario s{source, DampingStrength(pb), std::nullopt};
  if (pa) s.pa = DampingStrength(*pa);
  const auto r = scenarios::run(s);

  fmt::print(out, "source {}, p_b = {:.6f}", scenarios::to_string(source), pb);
  if (pa) fmt::print(out, ", p_a = {:.6f}", *pa);
  out << "\n\ninitial state:\n";
  print_matrix(out, r.initial.matrix());
  out << "after damping Bob's qubit:\n";
  print_matrix(out, r.after_b.matrix());
  if (r.after_ab) {
    out << "after damping Alice's qubit:\n";
    print_matrix(out, r.after_ab->matrix());
  }
  out << '\n';
  print_report(out, "one qubit damped", r.report_one);
  if (r.report_two) print_report(out, "both qubits damped", *r.report_two);
  out << '\n';
  fmt::print(out, "concurrence initial        {:.6f}\n", fidelity::concurrence(r.initial));
  fmt::print(out, "concurrence one damped     {:.6f}\n", fidelity::concurrence(r.after_b));
  if (r.after_ab) {
    fmt::print(out, "concurrence both damped    {:.6f}\n", fidelity::concurrence(*r.after_ab));
    fmt::print(out, "improved                   {}\n", *r.improved ? "yes" : "no");
    fmt::print(out, "transition                 {} -> {}\n",
               fidelity::to_string(r.report_one.usefulness),
               fidelity::to_string(r.report_two->usefulness));
  }
  return kExitOk;
}

}  // namespace adcfef::cli
