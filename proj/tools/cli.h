// Copyright 2026 The holeir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLEIR_TOOLS_CLI_H_
#define HOLEIR_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace holeir::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage errors to `err`.
int runCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

} // namespace holeir::cli

#endif // HOLEIR_TOOLS_CLI_H_
