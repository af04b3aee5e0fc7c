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

#include "accord/exact.hpp"

#include <cmath>
#include <numbers>

namespace accord {

namespace {

constexpr double kSnap = 1e-9;

MeasureResult closed(double v) { return MeasureResult{v, Method::ClosedForm, std::nullopt}; }

}  // namespace

double accord_from_omcp(double omcp, int d) {
  if (d < 2) throw Error(ErrorCode::BadDimension, "accord needs d >= 2");
  double a = d / (d - 1.0) * (omcp - 1.0 / d);
  if (a < 0.0 && a > -kSnap) a = 0.0;
  if (a > 1.0 && a < 1.0 + kSnap) a = 1.0;
  return a;
}

MeasureResult omcp_pure(const SchmidtForm& s) {
  const double sum = s.coeffs.sum();
  return closed(sum * sum / s.dim());
}

double accord_two_qubit(const DensityMatrix& rho) {
  const BlochForm b = bloch_decompose(rho);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(b.t);
  return svd.singularValues().minCoeff();
}

MeasureResult omcp_two_qubit(const DensityMatrix& rho) { return closed((1.0 + accord_two_qubit(rho)) / 2.0); }

MeasureResult omcp_isotropic(double p, int d) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "isotropic weight p must lie in [0,1]");
  if (d < 2) throw Error(ErrorCode::BadDimension, "isotropic states need d >= 2");
  const double dd = d;
  const double kink = 1.0 / (dd * dd);
  if (p == kink) return closed(1.0 / dd);
  const double slope = p < kink ? 1.0 / dd : 1.0 - 1.0 / dd;
  return closed(1.0 / dd + std::abs(p - kink) / (1.0 - kink) * slope);
}

MeasureResult omcp_pure_plus_noise(const SchmidtForm& s, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::OutOfRange, "mixing weight x must lie in [0,1]");
  return closed(x * omcp_pure(s).value + (1.0 - x) / s.dim());
}

MeasureResult omcp_classical(int d) {
  if (d < 1) throw Error(ErrorCode::BadDimension, "local dimension must be positive");
  return closed(1.0 / d);
}

UnitaryMatrix dft_unitary(int d) {
  if (d < 1) throw Error(ErrorCode::BadDimension, "local dimension must be positive");
  CMatrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * ((j * k) % d) / d);
  return UnitaryMatrix::from_matrix(std::move(f));
}

std::pair<UnitaryMatrix, UnitaryMatrix> optimal_unitaries_pure(int d) {
  UnitaryMatrix f = dft_unitary(d);
  return {f.conjugate(), f};
}

}  // namespace accord
