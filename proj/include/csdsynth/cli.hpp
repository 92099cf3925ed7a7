// Copyright 2026 The csdsynth Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace csdsynth {

/** Exit codes of the command-line tool. */
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitNotUnitary = 3,
  kExitVerification = 4,
  kExitWidthMismatch = 5,
};

/**
 * Runs the `csdsynth` command line (args excludes the program name) with
 * subcommands synth, random, verify and counts. Returns the exit code.
 */
int run_cli(
    const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace csdsynth
