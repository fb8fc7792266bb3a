// Copyright 2026 The hamcircle Authors
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
#ifndef HAMCIRCLE_CLI_CLI_HPP_
#define HAMCIRCLE_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace hamcircle::cli {

enum ExitCode : int {
  kOk = 0,
  kRefuted = 1,  // Refuted verdict, no circle, or the expected evidence is missing
  kUsage = 2,
  kUnsupported = 3,
};

// Runs one command. JSON goes to `out`, a human-readable summary to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamcircle::cli

#endif  // HAMCIRCLE_CLI_CLI_HPP_
