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

#ifndef ACCORD_EXACT_HPP_
#define ACCORD_EXACT_HPP_

#include <utility>

#include "accord/measure_result.hpp"
#include "accord/qstate.hpp"

// Closed-form OMCP evaluators. OMCP is the probability that Alice's and
// Bob's computational-basis outcomes agree after Bob picks his local unitary
// to minimize, and Alice, knowing it, picks hers to maximize. It always lies
// in [1/d, 1]; the accord rescales it to [0, 1].

namespace accord {

/// (d/(d-1)) (omcp - 1/d), snapped to 0 or 1 when within 1e-9 outside.
double accord_from_omcp(double omcp, int d);

/// (sum_i c_i)^2 / d.
MeasureResult omcp_pure(const SchmidtForm& s);

/// (1 + s)/2 with s the smallest singular value of the correlation matrix T.
MeasureResult omcp_two_qubit(const DensityMatrix& rho);
/// Convenience: the accord of a two-qubit state, i.e. that singular value.
double accord_two_qubit(const DensityMatrix& rho);

/// Piecewise in p with a kink at p = 1/d^2, where both branches give 1/d.
MeasureResult omcp_isotropic(double p, int d);

/// x * OMCP(psi) + (1 - x)/d.
MeasureResult omcp_pure_plus_noise(const SchmidtForm& s, double x);

/// States diagonal in a product of orthonormal local bases sit at chance.
MeasureResult omcp_classical(int d);

/// [U]_jk = exp(2 pi i jk/d)/sqrt(d).
UnitaryMatrix dft_unitary(int d);

/// (U_A, U_B) = (conj(F), F) with F the DFT. Optimal for every
/// Schmidt-diagonal pure state.
std::pair<UnitaryMatrix, UnitaryMatrix> optimal_unitaries_pure(int d);

}  // namespace accord

#endif  // ACCORD_EXACT_HPP_
