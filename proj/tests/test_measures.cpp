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

#include <gtest/gtest.h>

#include <cmath>

#include "accord/exact.hpp"
#include "accord/measures.hpp"
#include "accord/sampling.hpp"
#include "oracle.hpp"

namespace accord {
namespace {

TEST(Concurrence, Examples) {
  EXPECT_NEAR(concurrence(DensityMatrix::from_pure(make_max_entangled(2))), 1.0, 1e-12);
  EXPECT_NEAR(concurrence(make_isotropic(0.25, 2)), 0.0, 1e-12);
  for (double p : {0.2, 1.0 / 3.0, 0.5, 0.9}) {
    EXPECT_NEAR(concurrence(make_isotropic(p, 2)), std::max(0.0, 2 * p - 1), 1e-10) << p;
  }
  EXPECT_NEAR(concurrence(hidden_entanglement_fixture()), 0.024516, 1e-5);
  EXPECT_THROW(concurrence(make_isotropic(0.5, 3)), Error);
}

TEST(Concurrence, MatchesOracle) {
  Rng rng = make_rng(41, {1});
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_two_qubit_mixed(rng, i % 2 ? Ensemble::HaarComplex : Ensemble::RealGaussian);
    EXPECT_NEAR(concurrence(rho), oracle::concurrence(rho.matrix()), 1e-8);
  }
}

TEST(Concurrence, PureStateIsTwiceDeterminant) {
  Rng rng = make_rng(41, {2});
  for (int i = 0; i < 20; ++i) {
    const SchmidtForm s = schmidt_decompose(random_pure_state(2, rng));
    EXPECT_NEAR(concurrence(DensityMatrix::from_pure(s.recompose())), 2 * s.coeffs(0) * s.coeffs(1), 1e-7);
  }
}

TEST(SingletFraction, PureAndNumericalAgree) {
  Rng rng = make_rng(41, {3});
  OptimizerConfig cfg;
  cfg.outer_restarts = 4;
  for (int d : {2, 3}) {
    for (int i = 0; i < 3; ++i) {
      const PureState psi = random_pure_state(d, rng);
      const double exact = singlet_fraction_pure(schmidt_decompose(psi));
      EXPECT_NEAR(singlet_fraction_numerical(DensityMatrix::from_pure(psi), cfg).value, exact, 1e-6);
    }
  }
  EXPECT_NEAR(singlet_fraction_numerical(make_isotropic(0.6, 2), cfg).value, 0.6, 1e-7);
  EXPECT_NEAR(singlet_fraction_numerical(make_isotropic(0.05, 3), cfg).value, 0.95 / 8.0, 1e-7);
}

TEST(MutualInformation, Examples) {
  EXPECT_NEAR(mutual_information(DensityMatrix::from_pure(make_max_entangled(2))), 2.0, 1e-12);
  EXPECT_NEAR(mutual_information(DensityMatrix::from_pure(make_max_entangled(3))), 2 * std::log2(3.0), 1e-12);
  EXPECT_NEAR(mutual_information(make_isotropic(1.0 / 9.0, 3)), 0.0, 1e-12);
  Rng rng = make_rng(41, {4});
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = random_classical_state(3, rng);
    EXPECT_NEAR(mutual_information(rho), oracle::mutual_information(rho.matrix(), 3), 1e-10);
  }
}

TEST(JFunction, ValuesAndDomain) {
  EXPECT_EQ(j_function(0.0), 0.0);
  EXPECT_DOUBLE_EQ(j_function(1.0), 1.0);
  EXPECT_NEAR(j_function(0.5), 1.0 - oracle::h2(0.25), 1e-14);
  double prev = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double v = j_function(k / 100.0);
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_THROW(j_function(-0.01), Error);
  EXPECT_THROW(j_function(1.01), Error);
}

TEST(Discord, ClosedFormsMatchOracle) {
  for (double p : {0.0, 0.1, 0.25, 0.5, 0.8, 1.0}) {
    const double want = oracle::discord(make_isotropic(p, 2).matrix(), 0);
    EXPECT_NEAR(discord_isotropic(p), want, 1e-8) << p;
  }
  for (double x : {0.0, 0.3, 0.5, 1.0}) {
    const double want = oracle::discord(make_bell_diagonal({0.5, x / 2, (1 - x) / 2, 0.0}).matrix(), 0);
    EXPECT_NEAR(discord_bell_family(x), want, 1e-8) << x;
  }
  EXPECT_NEAR(discord_isotropic(1.0), 1.0, 1e-12);
  EXPECT_THROW(discord_isotropic(1.5), Error);
}

TEST(Discord, NumericalMatchesOracleOnBothSides) {
  Rng rng = make_rng(41, {5});
  for (int i = 0; i < 12; ++i) {
    const DensityMatrix rho = random_two_qubit_mixed(rng, i % 2 ? Ensemble::HaarComplex : Ensemble::RealGaussian);
    for (Subsystem side : {Subsystem::A, Subsystem::B}) {
      DiscordConfig cfg;
      cfg.measured_side = side;
      const MeasureResult r = discord_numerical(rho, cfg);
      EXPECT_NEAR(r.value, oracle::discord(rho.matrix(), side == Subsystem::A ? 0 : 1), 1e-7);
      ASSERT_TRUE(r.diagnostics && r.diagnostics->measured_side);
      EXPECT_EQ(*r.diagnostics->measured_side, side);
    }
  }
}

TEST(Discord, ClassicalStatesMeasuredInTheirBasisAreZero) {
  DiscordConfig cfg;
  EXPECT_NEAR(discord_numerical(make_bell_diagonal({0.5, 0.5, 0.0, 0.0}), cfg).value, 0.0, 1e-9);
  EXPECT_NEAR(discord_numerical(make_isotropic(0.25, 2), cfg).value, 0.0, 1e-9);
  cfg.restarts = 0;
  EXPECT_THROW(discord_numerical(make_isotropic(0.25, 2), cfg), Error);
  EXPECT_THROW(discord_numerical(make_isotropic(0.25, 3)), Error);
}

TEST(Chsh, Threshold) {
  EXPECT_NEAR(chsh_parameter(DensityMatrix::from_pure(make_max_entangled(2))), 2.0, 1e-12);
  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    const double w = (4 * p - 1) / 3;
    EXPECT_NEAR(chsh_parameter(make_isotropic(p, 2)), 2 * w * w, 1e-12);
  }
  const double pc = (1 + 3 / std::sqrt(2.0)) / 4;
  EXPECT_FALSE(chsh_violated(make_isotropic(pc - 1e-6, 2)));
  EXPECT_TRUE(chsh_violated(make_isotropic(pc + 1e-6, 2)));
  EXPECT_THROW(chsh_parameter(make_isotropic(0.5, 3)), Error);
}

}  // namespace
}  // namespace accord
