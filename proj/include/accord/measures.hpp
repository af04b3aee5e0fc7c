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

#ifndef ACCORD_MEASURES_HPP_
#define ACCORD_MEASURES_HPP_

#include <cstdint>

#include "accord/measure_result.hpp"
#include "accord/qstate.hpp"
#include "accord/search.hpp"

// Reference measures the accord is compared against. Entropies are in bits.

namespace accord {

struct DiscordConfig {
  Subsystem measured_side = Subsystem::A;
  int restarts = 32;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// Maximal overlap with a maximally entangled state, for a pure state:
/// (sum_i c_i)^2 / d.
double singlet_fraction_pure(const SchmidtForm& s);

/// max over U of <Phi+|(U (x) I)^dagger rho (U (x) I)|Phi+>, by multi-start
/// random-direction search on U(d). Every maximally entangled state has this
/// form, so this is the singlet fraction of an arbitrary state.
MeasureResult singlet_fraction_numerical(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// S(rho_A) + S(rho_B) - S(rho).
double mutual_information(const DensityMatrix& rho);

/// [(1+a) log2(1+a) + (1-a) log2(1-a)] / 2, equal to 1 at a = 1.
double j_function(double a);

/// Discord of the d = 2 isotropic state with weight p: I - J(accord).
double discord_isotropic(double p);

/// Discord of the Bell-diagonal state with weights (1/2, x/2, (1-x)/2, 0).
double discord_bell_family(double x);

/// I(rho) minus the classical correlation maximized over rank-1 projective
/// measurements on cfg.measured_side (two Bloch-sphere angles, multi-start
/// coordinate search).
MeasureResult discord_numerical(const DensityMatrix& rho, const DiscordConfig& cfg = {});

/// Sum of the two largest squared singular values of T. CHSH can be
/// violated iff this exceeds 1.
double chsh_parameter(const DensityMatrix& rho);
inline bool chsh_violated(const DensityMatrix& rho) { return chsh_parameter(rho) > 1.0; }

}  // namespace accord

#endif  // ACCORD_MEASURES_HPP_
