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

#ifndef MCHOW_CLI_HPP_
#define MCHOW_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mchow {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitOracleBound = 2,
  kExitIdentityFailure = 3,
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mchow

#endif  // MCHOW_CLI_HPP_
