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

#ifndef ACCORD_SAMPLING_HPP_
#define ACCORD_SAMPLING_HPP_

#include <vector>

#include "accord/qstate.hpp"
#include "accord/random.hpp"

namespace accord {

/// Ensembles for random two-qubit mixed states. Both draw a four-qubit
/// pure state and trace out the last two qubits.
enum class Ensemble {
  HaarComplex,   // i.i.d. complex Gaussian amplitudes, normalized
  RealGaussian,  // i.i.d. real Gaussian amplitudes, normalized
};

const char* to_string(Ensemble e);

/// Haar-uniform pure state with local dimension d.
PureState random_pure_state(int d, Rng& rng);

DensityMatrix random_two_qubit_mixed(Rng& rng, Ensemble family);

/// Uniform point of the (k-1)-simplex.
std::vector<double> flat_dirichlet(int k, Rng& rng);

/// Weights drawn by flat_dirichlet(4).
DensityMatrix random_bell_diagonal(Rng& rng);

/// (U_A (x) U_B) diag(w) (U_A (x) U_B)^dagger with Haar U_A, U_B and flat
/// Dirichlet weights w.
DensityMatrix random_classical_state(int d, Rng& rng);

struct ZeroAccordSample {
  DensityMatrix rho;
  double concurrence = 0.0;
  int attempts = 0;
};

/// Builds T = O1 diag(t1, t2, 0) O2 with Haar O1, O2 in O(3) and local
/// Bloch vectors uniform in the ball of radius 1/2, rejecting non-PSD
/// candidates, until one has concurrence above 0.01. Throws NotFound after
/// max_attempts.
ZeroAccordSample zero_accord_entangled_search(Rng& rng, int max_attempts);

}  // namespace accord

#endif  // ACCORD_SAMPLING_HPP_
