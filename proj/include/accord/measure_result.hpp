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

#ifndef ACCORD_MEASURE_RESULT_HPP_
#define ACCORD_MEASURE_RESULT_HPP_

#include <optional>
#include <string>

#include "accord/qstate.hpp"

namespace accord {

enum class Method { ClosedForm, Numerical, MonteCarlo };

const char* to_string(Method m);

/// What a numerical evaluator did to produce its value.
struct Diagnostics {
  int inner_restarts = 0;      // local ascents per inner maximization
  int outer_restarts = 0;      // local descents of the outer layer
  double best_value = 0.0;     // over outer runs (the reported value)
  double worst_value = 0.0;    // over outer runs
  long iterations = 0;         // line searches summed over all runs
  long evaluations = 0;        // objective evaluations (inner maxima for minimax)
  int unconverged_runs = 0;    // runs that hit max_iterations
  std::optional<UnitaryMatrix> u_a;
  std::optional<UnitaryMatrix> u_b;
  std::optional<Subsystem> measured_side;
};

struct MeasureResult {
  double value = 0.0;
  Method method = Method::ClosedForm;
  std::optional<Diagnostics> diagnostics;
};

/// Thrown by the iterative evaluators. Carries the best value found so far.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, MeasureResult best_so_far)
      : Error(ErrorCode::NoConvergence, what), best_(std::move(best_so_far)) {}

  const MeasureResult& best_so_far() const noexcept { return best_; }

 private:
  MeasureResult best_;
};

}  // namespace accord

#endif  // ACCORD_MEASURE_RESULT_HPP_
