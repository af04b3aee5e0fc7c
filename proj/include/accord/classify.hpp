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

#ifndef ACCORD_CLASSIFY_HPP_
#define ACCORD_CLASSIFY_HPP_

#include <optional>

#include "accord/measure_result.hpp"
#include "accord/qstate.hpp"
#include "accord/search.hpp"

namespace accord {

enum class Family { Pure, Isotropic, PurePlusNoise, TwoQubit, General };

const char* to_string(Family f);

/// Structural match of a state against the families with a closed-form OMCP.
/// Checked in order: pure (purity above 1 - 1e-10), isotropic, pure state
/// mixed with white noise (one eigenvalue above a flat remainder), two
/// qubits, otherwise general.
struct Classification {
  Family family = Family::General;
  std::optional<SchmidtForm> schmidt;  // Pure and PurePlusNoise
  double weight = 0.0;                 // p for Isotropic, x for PurePlusNoise
};

Classification classify_state(const DensityMatrix& rho, double tol = 1e-9);

/// Closed form when classify_state recognizes the state, omcp_numerical
/// otherwise.
MeasureResult omcp_auto(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace accord

#endif  // ACCORD_CLASSIFY_HPP_
