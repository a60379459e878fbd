// Copyright 2026 The Authors.
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

// Command-line front end.
//
//   matroid-adjoint <command> <matroid> [--candidate SPEC] [--max-iter N]
//       [--size-cap N] [--lattice flats|opposite|extension]
//       [--format text|json] [--out FILE] [--timings]
//
// <matroid> is a fixture name or a matroid file. Exit codes: 0 success,
// 1 a property that must hold failed (the witness is printed), 2 usage,
// input or resource errors.

#ifndef MADJ_CLI_H_
#define MADJ_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace madj {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

struct CliOptions {
  std::string command;
  std::string matroid;
  std::optional<std::string> candidate;
  int max_iter = 8;
  int size_cap = 2000;
  std::string lattice = "flats";
  std::string format = "text";
  std::optional<std::string> out;
  bool timings = false;
};

const std::vector<std::string>& CliCommands();

// Runs one parsed command; the report goes to `out` (or options.out) and
// diagnostics to `err`.
int RunCommand(const CliOptions& options, std::ostream& out, std::ostream& err);

// Parses argv and runs it.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace madj

#endif  // MADJ_CLI_H_
