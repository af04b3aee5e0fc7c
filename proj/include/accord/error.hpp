// Copyright 2026 The Accord Authors
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

#ifndef ACCORD_ERROR_HPP_
#define ACCORD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace accord {

enum class ErrorCode {
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  NotUnitary,
  NotNormalized,
  BadDimension,
  OutOfRange,
  NoConvergence,
  NotFound,
  BadStateFile,
};

const char* to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The message names
/// the violated invariant and, where one exists, the offending magnitude.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace accord

#endif  // ACCORD_ERROR_HPP_
