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

#ifndef ACCORD_GAME_HPP_
#define ACCORD_GAME_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "accord/qstate.hpp"
#include "accord/random.hpp"

// Monte Carlo version of the coincidence game: Bob draws n_b Haar
// unitaries, Alice answers each with n_a Haar unitaries, every pair is
// measured `shots` times, Alice keeps her best coincidence fraction and Bob
// his worst.

namespace accord {

struct GameConfig {
  int n_b = 16;
  int n_a = 16;
  int shots = 1000;  // 0: use the exact coincidence probability per pair
  std::uint64_t seed = 0;
  bool record_counts = false;

  void validate() const;
};

struct GameResult {
  double estimate = 0.0;
  std::vector<double> per_b_maxima;
  /// Coincidence counts per (b, a) pair, row-major in b. Only filled for
  /// sampled runs with record_counts set.
  std::optional<std::vector<long>> empirical_distribution;
};

/// Joint outcome probabilities of measuring (U_A (x) U_B) rho (U_A (x) U_B)^dagger
/// in the computational basis, indexed n_a * d + n_b.
std::vector<double> joint_distribution(const DensityMatrix& rho, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b);

/// One outcome pair (n_a, n_b) drawn from joint_distribution.
std::pair<int, int> sample_measurement(const DensityMatrix& rho, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b,
                                       Rng& rng);

/// Unitaries and outcomes come from streams derived from cfg.seed and the
/// pair index, so results do not depend on evaluation order.
GameResult simulate_game(const DensityMatrix& rho, const GameConfig& cfg);

}  // namespace accord

#endif  // ACCORD_GAME_HPP_
