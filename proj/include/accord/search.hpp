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

#ifndef ACCORD_SEARCH_HPP_
#define ACCORD_SEARCH_HPP_

#include <functional>
#include <vector>

#include "accord/qstate.hpp"
#include "accord/random.hpp"

// Derivative-free local minimization used by every numerical evaluator:
// bracketed Brent line searches, either along coordinates or along random
// directions of the unitary group.

namespace accord {

/// Knobs shared by the minimax optimizer and the measurement searches.
struct OptimizerConfig {
  int inner_restarts = 16;
  int outer_restarts = 16;
  int max_iterations = 2000;
  double step_tolerance = 1e-10;
  double value_tolerance = 1e-8;
  std::uint64_t seed = 0;

  /// Throws OutOfRange on nonpositive counts or tolerances.
  void validate() const;
};

namespace search {

struct LineResult {
  double t = 0.0;
  double value = 0.0;
  long evaluations = 0;
};

/// Minimizes f along t starting from t = 0 where f(0) = f0. Expands a
/// bracket from a trial step h, never beyond |t| = limit, then refines it
/// with Brent's method. Never returns a value above f0.
LineResult line_minimize(const std::function<double(double)>& f, double f0, double h, double limit);

struct RunResult {
  std::vector<double> x;  // coordinates, for coordinate searches
  CMatrix u;              // point on U(d), for unitary searches
  double value = 0.0;
  long iterations = 0;    // line searches
  long evaluations = 0;
  bool converged = false;
};

/// Cyclic coordinate descent over the listed coordinates of x, each treated
/// as an angle searched within +-limit of its current value. Stops when a
/// full sweep improves by less than value_tolerance, or moves no coordinate
/// by more than step_tolerance.
RunResult minimize_coordinates(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                               const std::vector<int>& coords, double limit, const OptimizerConfig& cfg);

/// Random-direction line search on U(d) through the chart
/// t -> exp(i t H) U with H a unit-norm random Hermitian direction. Stops
/// when d^2 consecutive searches improve by less than value_tolerance in total.
RunResult minimize_over_unitary(const std::function<double(const CMatrix&)>& f, CMatrix start,
                                const OptimizerConfig& cfg, Rng& rng);

/// exp(iH) for Hermitian H.
CMatrix expi_hermitian(const CMatrix& h);

/// Nearest unitary (polar factor), to clear accumulated rounding.
CMatrix reunitarize(const CMatrix& u);

}  // namespace search
}  // namespace accord

#endif  // ACCORD_SEARCH_HPP_
