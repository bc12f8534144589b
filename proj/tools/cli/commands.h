// Copyright 2026 The riskdensity Authors
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

#ifndef RISKDENSITY_TOOLS_CLI_COMMANDS_H_
#define RISKDENSITY_TOOLS_CLI_COMMANDS_H_

#include <iosfwd>

namespace riskdensity::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,    // bad flags, unknown method, missing file
  kExitConfig = 3,   // unparsable or inconsistent configuration
  kExitRuntime = 4,  // estimator or output failure
};

// Entry point shared by main() and the tests. Data goes to `out`,
// diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace riskdensity::cli

#endif  // RISKDENSITY_TOOLS_CLI_COMMANDS_H_
