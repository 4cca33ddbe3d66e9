// Copyright 2026 The biuniv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "report.hpp"

namespace {

using biuniv::report::Command;
using biuniv::report::Format;
using biuniv::report::RunConfig;

struct RawOptions {
  std::optional<double> lambda;
  std::optional<double> beta;
  std::string lambda_grid;
  std::string beta_grid;
  std::optional<double> phi_b1;
  std::optional<double> phi_b2;
  std::optional<std::string> phi_kind;
  std::optional<double> phi_param;
  double resolution = 0.005;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 42;
  std::string output;
  std::optional<std::string> format;
};

void add_common(CLI::App* cmd, RawOptions& o, bool grids) {
  cmd->add_option("--lambda", o.lambda, "class parameter lambda in [0, 1]");
  cmd->add_option("--beta", o.beta, "order beta in [0, 1)");
  if (grids) {
    cmd->add_option("--lambda-grid", o.lambda_grid, "lambda lattice a:b:step");
    cmd->add_option("--beta-grid", o.beta_grid, "beta lattice a:b:step");
  }
  cmd->add_option("--phi-b1", o.phi_b1, "first coefficient of phi");
  cmd->add_option("--phi-b2", o.phi_b2, "second coefficient of phi");
  cmd->add_option("--phi-kind", o.phi_kind, "special phi family")->check(CLI::IsMember({"linear", "power"}));
  cmd->add_option("--phi-param", o.phi_param, "parameter of the special phi");
  cmd->add_option("--resolution", o.resolution, "oracle grid resolution");
  cmd->add_option("--samples", o.samples, "accepted samples per lattice point");
  cmd->add_option("--seed", o.seed, "base RNG seed");
  cmd->add_option("--output", o.output, "write the report to this path");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

RunConfig to_config(Command command, const RawOptions& o) {
  RunConfig c;
  c.command = command;
  c.lambda = o.lambda;
  c.beta = o.beta;
  if (!o.lambda_grid.empty()) c.lambda_grid = biuniv::report::parse_grid(o.lambda_grid);
  if (!o.beta_grid.empty()) c.beta_grid = biuniv::report::parse_grid(o.beta_grid);
  if (o.lambda && c.lambda_grid.empty() && command != Command::kBounds) c.lambda_grid = {*o.lambda};
  if (o.beta && c.beta_grid.empty() && command != Command::kBounds) c.beta_grid = {*o.beta};
  c.phi.b1 = o.phi_b1;
  c.phi.b2 = o.phi_b2;
  if (o.phi_kind) {
    c.phi.kind = *o.phi_kind == "linear" ? biuniv::SpecialPhiKind::kLinearOrder : biuniv::SpecialPhiKind::kPower;
  }
  c.phi.param = o.phi_param;
  c.resolution = o.resolution;
  c.samples = o.samples;
  c.seed = o.seed;
  c.output = o.output;
  if (o.format) c.format = *o.format == "csv" ? Format::kCsv : Format::kJson;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient bounds for bi-univalent classes and their numerical verification"};
  app.require_subcommand(1);

  RawOptions opts;
  CLI::App* bounds = app.add_subcommand("bounds", "print the closed-form bounds at one (lambda, beta)");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  CLI::App* sweep = app.add_subcommand("sweep", "tabulate the Hankel bound against sampled maxima");
  add_common(bounds, opts, false);
  add_common(verify, opts, true);
  add_common(sweep, opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Command command = bounds->parsed() ? Command::kBounds : verify->parsed() ? Command::kVerify : Command::kSweep;
  RunConfig config;
  try {
    config = to_config(command, opts);
  } catch (const biuniv::report::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return biuniv::report::run(config, std::cout, std::cerr);
}
