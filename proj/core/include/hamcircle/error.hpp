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

#ifndef HAMCIRCLE_ERROR_HPP_
#define HAMCIRCLE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamcircle {

enum class ErrorCode {
  kSpecMismatch,
  kUnknownGenerator,
  kNotNormal,
  kUnsupported,
  kBudgetExceeded,
  kTooSmall,
  kNoHamiltonCycleFound,
  kNoHamiltonCircle,
  kMalformedCylinder,
  kAlternationViolated,
  kGeneratorInsideSubgroup,
  kWrongIndex,
  kNotDedekind,
  kNoSeparation,
  kInvalidArgument,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the contract violation and `what()` carries detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hamcircle

#endif  // HAMCIRCLE_ERROR_HPP_
