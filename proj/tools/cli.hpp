// Copyright 2026 The posetcount Authors
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace posetcount::cli {

enum class Command { kCount, kProfile, kVerify, kGenerate, kBench };
enum class Format { kPoset, kPerm, kGraph };
enum class Target { kIndependentSets, kCliques, kBoth };
enum class CliVariant {
  kAll,
  kMaximal,
  kBySize,
  kMaximalBySize,
  kProfile,
  kMaximalProfile,
  kPolynomial,
  kAlpha
};

struct RunConfig {
  Command command = Command::kCount;
  std::string input;  // path, or "-" for standard input
  Format format = Format::kPoset;
  Target target = Target::kIndependentSets;
  CliVariant variant = CliVariant::kAll;
  std::size_t k = 0;
  std::string x = "1";
  std::optional<std::uint64_t> modulus;
  bool exclude_empty = false;
  bool validate = false;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  double density = 0.3;
};

/// Executes one command. Results go to `out`, diagnostics to `err`; the
/// return value is the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses a command line (without the program name) and runs it.
int run_command_line(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err);

}  // namespace posetcount::cli
