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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adcfef/error.hpp"
#include "adcfef/scenarios.hpp"

namespace adcfef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Inclusive grid start:stop:step, points generated as start + i*step.
struct Range {
  double start;
  double stop;
  double step;

  std::vector<double> points() const;
};

/// Parses "start:stop:step"; requires step > 0, start <= stop, and every
/// point inside [0, 1].
Range parse_range(std::string_view text);

enum class SweepMode { PbOnly, PaAtFixedPb, Grid };

struct SweepSpec {
  scenarios::BellKind source = scenarios::BellKind::PhiPlus;
  SweepMode mode = SweepMode::PbOnly;
  std::optional<Range> pb_range;
  std::optional<double> pb;
  std::optional<Range> pa_range;

  /// Throws UsageError when the flags do not describe the mode.
  void validate() const;
};

/// Chooses the mode from which flags were given.
SweepSpec make_sweep_spec(scenarios::BellKind source, std::optional<Range> pb_range,
                          std::optional<double> pb, std::optional<Range> pa_range);

struct SweepRow {
  scenarios::BellKind source;
  double pb;
  std::optional<double> pa;
  double f_one;
  std::optional<double> f_two;
  double fidelity_one;
  std::optional<double> fidelity_two;
  std::optional<bool> improved;
  bool teleporting_one;
  std::optional<bool> teleporting_two;
};

/// Rows in ascending grid order (p_b outer, p_a inner). Points are evaluated
/// on `threads` workers (0 = hardware concurrency).
std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned threads = 0);

std::string_view csv_header();
std::string format_csv_row(const SweepRow& row);
void write_csv(std::ostream& out, std::span<const SweepRow> rows);

struct VerificationOutcome {
  std::string name;
  double expected;
  double computed;
  double tolerance;
  bool pass;
};

VerificationOutcome make_outcome(std::string name, double expected, double computed,
                                 double tolerance);

struct VerifyOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20260101;
};

std::vector<VerificationOutcome> run_verification(const VerifyOptions& options);

int cmd_verify(const VerifyOptions& options, std::ostream& out);
/// `path` of "-" writes to `out`.
int cmd_sweep(const SweepSpec& spec, const std::string& path, std::ostream& out,
              std::ostream& err);
int cmd_optimal(double pb, std::ostream& out, std::ostream& err);
int cmd_inspect(scenarios::BellKind source, double pb, std::optional<double> pa,
                std::ostream& out, std::ostream& err);

}  // namespace adcfef::cli
