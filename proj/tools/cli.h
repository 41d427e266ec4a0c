// Copyright 2026 The quadlin Authors
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

#ifndef QUADLIN_TOOLS_CLI_H_
#define QUADLIN_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace quadlin::cli {

// Exit statuses, one per failure class.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kValidation = 3,
  kEnumeration = 4,
  kLpFailure = 5,
  kChainViolation = 6,
  kInternal = 7,
};

// Runs one command line (args[0] is the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadlin::cli

#endif  // QUADLIN_TOOLS_CLI_H_
