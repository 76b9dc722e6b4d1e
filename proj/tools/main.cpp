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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli.hpp"

namespace {

using adcfef::cli::kExitUsage;
using adcfef::scenarios::BellKind;

BellKind require_source(const std::string& name) {
  const auto kind = adcfef::scenarios::parse_bell_kind(name);
  if (!kind) {
    throw adcfef::cli::UsageError(
        fmt::format("unknown source '{}' (expected phi+, phi-, psi+ or psi-)", name));
  }
  return *kind;
}

double require_number(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw adcfef::cli::UsageError(fmt::format("invalid {} '{}'", what, text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amplitude-damped Bell states: fully entangled fraction and teleportation fidelity"};
  app.require_subcommand(1);

  std::string source = "phi+";
  std::optional<double> pb;
  std::optional<double> pa;
  std::string pb_range;
  std::string pa_range;
  std::string out_path = "-";
  std::uint64_t seed = adcfef::cli::VerifyOptions{}.seed;
  std::uint64_t samples = adcfef::cli::VerifyOptions{}.samples;
  std::vector<std::string> positional;

  auto* verify = app.add_subcommand("verify", "Run the golden-value and invariant suite");
  verify->add_option("--samples", samples, "Oracle sample count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for randomized checks");

  auto* sweep = app.add_subcommand("sweep", "Sweep damping strengths and write CSV");
  sweep->add_option("--source", source, "phi+, phi-, psi+ or psi-");
  sweep->add_option("--pb", pb, "Fixed p_b for a p_a sweep");
  sweep->add_option("--pb-range", pb_range, "start:stop:step");
  sweep->add_option("--pa-range", pa_range, "start:stop:step");
  sweep->add_option("--out", out_path, "Output CSV path ('-' for stdout)");

  auto* optimal = app.add_subcommand("optimal", "Optimal second damping for a given p_b");
  optimal->add_option("--pb", pb, "Damping of Bob's qubit");
  optimal->add_option("pb_value", positional, "p_b");

  auto* inspect = app.add_subcommand("inspect", "Print one scenario in full");
  inspect->add_option("--source", source, "phi+, phi-, psi+ or psi-");
  inspect->add_option("--pb", pb, "Damping of Bob's qubit");
  inspect->add_option("--pa", pa, "Damping of Alice's qubit");
  inspect->add_option("args", positional, "SOURCE PB [PA]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      return adcfef::cli::cmd_verify({samples, seed}, std::cout);
    }
    if (*sweep) {
      std::optional<adcfef::cli::Range> pbr, par;
      if (!pb_range.empty()) pbr = adcfef::cli::parse_range(pb_range);
      if (!pa_range.empty()) par = adcfef::cli::parse_range(pa_range);
      const auto spec = adcfef::cli::make_sweep_spec(require_source(source), pbr, pb, par);
      return adcfef::cli::cmd_sweep(spec, out_path, std::cout, std::cerr);
    }
    if (*optimal) {
      if (positional.size() > 1) throw adcfef::cli::UsageError("optimal takes a single p_b");
      if (!positional.empty()) pb = require_number(positional[0], "p_b");
      if (!pb) throw adcfef::cli::UsageError("optimal needs p_b");
      return adcfef::cli::cmd_optimal(*pb, std::cout, std::cerr);
    }
    if (*inspect) {
      if (positional.size() > 3) throw adcfef::cli::UsageError("inspect takes SOURCE PB [PA]");
      if (!positional.empty()) source = positional[0];
      if (positional.size() >= 2) pb = require_number(positional[1], "p_b");
      if (positional.size() == 3) pa = require_number(positional[2], "p_a");
      if (!pb) throw adcfef::cli::UsageError("inspect needs p_b");
      return adcfef::cli::cmd_inspect(require_source(source), *pb, pa, std::cout, std::cerr);
    }
  } catch (const adcfef::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
