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

#include "accord/classify.hpp"

#include <algorithm>

#include "accord/exact.hpp"
#include "accord/optimizer.hpp"

namespace accord {

namespace {

PureState normalized(const CVector& v, int d) { return PureState::from_amplitudes(v / v.norm(), d); }

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Pure: return "pure";
    case Family::Isotropic: return "isotropic";
    case Family::PurePlusNoise: return "pure_plus_noise";
    case Family::TwoQubit: return "two_qubit";
    case Family::General: return "general";
  }
  return "unknown";
}

Classification classify_state(const DensityMatrix& rho, double tol) {
  const int d = rho.dim_local();
  const int n = d * d;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const RVector& w = es.eigenvalues();  // ascending
  const CVector top = es.eigenvectors().col(n - 1);

  Classification c;
  if (rho.purity() > 1.0 - 1e-10) {
    c.family = Family::Pure;
    c.schmidt = schmidt_decompose(normalized(top, d));
    return c;
  }

  const CVector phi = make_max_entangled(d).amplitudes();
  const double p = (phi.adjoint() * rho.matrix() * phi)(0, 0).real();
  if (p >= -tol && p <= 1.0 + tol) {
    const double pc = std::clamp(p, 0.0, 1.0);
    if ((rho.matrix() - make_isotropic(pc, d).matrix()).cwiseAbs().maxCoeff() < tol) {
      c.family = Family::Isotropic;
      c.weight = pc;
      return c;
    }
  }

  const double floor = w(0);
  if (w(n - 2) - floor < tol && w(n - 1) - floor > tol) {
    c.family = Family::PurePlusNoise;
    c.weight = w(n - 1) - floor;
    c.schmidt = schmidt_decompose(normalized(top, d));
    return c;
  }

  c.family = d == 2 ? Family::TwoQubit : Family::General;
  return c;
}

MeasureResult omcp_auto(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  const Classification c = classify_state(rho);
  switch (c.family) {
    case Family::Pure: return omcp_pure(*c.schmidt);
    case Family::Isotropic: return omcp_isotropic(c.weight, rho.dim_local());
    case Family::PurePlusNoise: return omcp_pure_plus_noise(*c.schmidt, c.weight);
    case Family::TwoQubit: return omcp_two_qubit(rho);
    case Family::General: break;
  }
  return omcp_numerical(rho, cfg);
}

}  // namespace accord
