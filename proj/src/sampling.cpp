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

#include "accord/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "accord/measures.hpp"

namespace accord {

namespace {

Eigen::Vector3d uniform_in_ball(double radius, Rng& rng) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  while (v.norm() == 0.0) v = Eigen::Vector3d(g(rng), g(rng), g(rng));
  return v.normalized() * radius * std::cbrt(u(rng));
}

}  // namespace

const char* to_string(Ensemble e) {
  switch (e) {
    case Ensemble::HaarComplex: return "haar";
    case Ensemble::RealGaussian: return "real_gaussian";
  }
  return "unknown";
}

PureState random_pure_state(int d, Rng& rng) {
  if (d < 2) throw Error(ErrorCode::BadDimension, "local dimension must be at least 2");
  CVector v = complex_gaussian(d * d, 1, rng).col(0);
  return PureState::from_amplitudes(v / v.norm(), d);
}

DensityMatrix random_two_qubit_mixed(Rng& rng, Ensemble family) {
  CMatrix m(4, 4);
  if (family == Ensemble::HaarComplex) {
    m = complex_gaussian(4, 4, rng);
  } else {
    std::normal_distribution<double> g;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g(rng);
  }
  // Rows index qubits 1-2, columns the traced-out qubits 3-4.
  m /= m.norm();
  CMatrix rho = m * m.adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  rho /= rho.trace().real();
  return validate_density(rho, 2);
}

std::vector<double> flat_dirichlet(int k, Rng& rng) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "simplex dimension must be positive");
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(static_cast<std::size_t>(k));
  double sum = 0.0;
  for (double& x : w) sum += (x = e(rng));
  for (double& x : w) x /= sum;
  return w;
}

DensityMatrix random_bell_diagonal(Rng& rng) {
  const std::vector<double> w = flat_dirichlet(4, rng);
  return make_bell_diagonal({w[0], w[1], w[2], w[3]});
}

DensityMatrix random_classical_state(int d, Rng& rng) {
  if (d < 2) throw Error(ErrorCode::BadDimension, "local dimension must be at least 2");
  const std::vector<double> w = flat_dirichlet(d * d, rng);
  const UnitaryMatrix ua = haar_random_unitary(d, rng);
  const UnitaryMatrix ub = haar_random_unitary(d, rng);
  CMatrix diag = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d * d; ++i) diag(i, i) = w[static_cast<std::size_t>(i)];
  const CMatrix u = tensor_product(ua.matrix(), ub.matrix());
  CMatrix rho = u * diag * u.adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return validate_density(rho, d);
}

ZeroAccordSample zero_accord_entangled_search(Rng& rng, int max_attempts) {
  if (max_attempts < 1) throw Error(ErrorCode::OutOfRange, "max_attempts must be positive");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const Eigen::Matrix3d t = Eigen::Vector3d(u(rng), u(rng), 0.0).asDiagonal();
    const Eigen::Matrix3d o1 = haar_random_orthogonal(3, rng);
    const Eigen::Matrix3d o2 = haar_random_orthogonal(3, rng);
    BlochForm b;
    b.t = o1 * t * o2;
    b.x = uniform_in_ball(0.5, rng);
    b.y = uniform_in_ball(0.5, rng);
    try {
      DensityMatrix rho = bloch_compose(b);
      const double c = concurrence(rho);
      if (c > 0.01) return {std::move(rho), c, attempt};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotPSD) throw;
    }
  }
  throw Error(ErrorCode::NotFound, "no entangled zero-accord state within the attempt budget");
}

}  // namespace accord
