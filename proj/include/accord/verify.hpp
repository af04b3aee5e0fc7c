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

#ifndef ACCORD_VERIFY_HPP_
#define ACCORD_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

// Self-checks over sampled states, grouped into named suites:
//   identities    MCP formulas agree, Hadamard trace identity
//   closed-forms  numerical OMCP against the closed forms
//   bounds        1/d <= OMCP <= 1, classical states at chance
//   bell-diagonal C <= A and J(A) <= D on Bell-diagonal states
//   general       J(A) <= D on both mixed ensembles, zero-accord search
//   game          exact-probability game on two reference states

namespace accord {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int count = 100;  // states per sampled check
};

const std::vector<std::string>& verify_suites();

/// Runs one suite, or all of them for "all". Throws OutOfRange on an
/// unknown name.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opts);

}  // namespace accord

#endif  // ACCORD_VERIFY_HPP_
