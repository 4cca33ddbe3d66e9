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

#pragma once

// Command implementations behind the biuniv CLI. Each command renders to a
// string so that output can be compared byte-for-byte in tests; run() applies
// the exit-code contract (0 ok, 1 a mathematical check failed, 2 bad config).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biuniv/minda_core.hpp"
#include "json.hpp"

namespace biuniv::report {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kBounds, kVerify, kSweep };
enum class Format { kJson, kCsv };

struct PhiSpec {
  std::optional<double> b1;
  std::optional<double> b2;
  std::optional<SpecialPhiKind> kind;
  std::optional<double> param;
};

struct RunConfig {
  Command command = Command::kBounds;
  std::optional<double> lambda;
  std::optional<double> beta;
  std::vector<double> lambda_grid;  // empty selects the command's default
  std::vector<double> beta_grid;
  PhiSpec phi;
  double resolution = 0.005;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 42;
  std::string output;  // empty writes to the given stream
  std::optional<Format> format;
};

inline constexpr std::size_t kDefaultVerifySamples = 100000;
inline constexpr std::size_t kDefaultSweepSamples = 10000;

/// "a:b:step" -> {a, a + step, ..., b}. Throws ConfigError on malformed input.
std::vector<double> parse_grid(std::string_view spec);

/// Explicit (B1, B2), a named special phi, or the default linear-order(beta).
MindaPhi resolve_phi(const PhiSpec& spec, double beta);

/// 12 significant digits, as used in every emitted number.
std::string format_number(double v);

std::string cmd_bounds(const RunConfig& config);

struct CheckRow {
  std::string check;
  bool passed = true;
  std::size_t points = 0;
  // Smallest slack observed; a claim is violated where its slack is negative
  // (or non-positive, for strict inequalities).
  double worst_slack = 0.0;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
};

struct VerifyReport {
  std::vector<CheckRow> rows;

  bool all_passed() const noexcept;
  const CheckRow* first_failure() const noexcept;
};

VerifyReport cmd_verify(const RunConfig& config);
std::string render(const VerifyReport& report, Format format);

std::string cmd_sweep(const RunConfig& config);

/// Executes a configured command, writes its output to `out` (or to
/// config.output) and diagnostics to `err`; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace biuniv::report
