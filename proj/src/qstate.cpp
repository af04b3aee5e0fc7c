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

#include "accord/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace accord {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

void require_dim(int d) {
  if (d < 1) throw Error(ErrorCode::BadDimension, "local dimension must be positive, got " + std::to_string(d));
}

}  // namespace

UnitaryMatrix UnitaryMatrix::from_matrix(CMatrix m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::BadDimension, "unitary must be square and nonempty");
  }
  const double dev = (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  if (dev > kUnitaryTolerance) {
    throw Error(ErrorCode::NotUnitary, "max |U^dagger U - I| = " + fmt(dev));
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::identity(int d) {
  require_dim(d);
  return UnitaryMatrix(CMatrix::Identity(d, d));
}

PureState PureState::from_amplitudes(CVector amplitudes, int d) {
  require_dim(d);
  if (amplitudes.size() != static_cast<Eigen::Index>(d) * d) {
    throw Error(ErrorCode::BadDimension, "pure state needs d^2 = " + std::to_string(d * d) +
                                             " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  const double dev = std::abs(amplitudes.norm() - 1.0);
  if (dev > kNormTolerance) throw Error(ErrorCode::NotNormalized, "| |psi| - 1 | = " + fmt(dev));
  return PureState(std::move(amplitudes), d);
}

DensityMatrix validate_density(const CMatrix& m, int d) {
  require_dim(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::BadDimension, "expected " + std::to_string(n) + "x" + std::to_string(n) + " matrix, got " +
                                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance) throw Error(ErrorCode::NotHermitian, "max |rho_ij - conj(rho_ji)| = " + fmt(herm));
  const double tr = std::abs(m.trace() - Complex(1.0, 0.0));
  if (tr > kTraceTolerance) throw Error(ErrorCode::NotUnitTrace, "|Tr(rho) - 1| = " + fmt(tr));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin < kPsdFloor) throw Error(ErrorCode::NotPSD, "smallest eigenvalue = " + fmt(lmin));
  return DensityMatrix(m, d);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector(), psi.dim_local());
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix DensityMatrix::conjugated_by(const UnitaryMatrix& u_a, const UnitaryMatrix& u_b) const {
  if (u_a.dim() != d_ || u_b.dim() != d_) throw Error(ErrorCode::BadDimension, "local unitary dimension mismatch");
  const CMatrix w = tensor_product(u_a.matrix(), u_b.matrix());
  return DensityMatrix(w * m_ * w.adjoint(), d_);
}

DensityMatrix DensityMatrix::swapped() const {
  const int d = d_;
  CMatrix out(size(), size());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int a2 = 0; a2 < d; ++a2)
        for (int b2 = 0; b2 < d; ++b2) out(b * d + a, b2 * d + a2) = m_(a * d + b, a2 * d + b2);
  return DensityMatrix(std::move(out), d);
}

PureState SchmidtForm::recompose() const {
  const int d = dim();
  CVector diag = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) diag(i * d + i) = coeffs(i);
  return PureState::from_amplitudes(tensor_product(left.matrix(), right.matrix()) * diag, d);
}

SchmidtForm SchmidtForm::from_coefficients(RVector c) {
  if (c.size() < 1) throw Error(ErrorCode::BadDimension, "empty Schmidt vector");
  if (c.minCoeff() < 0.0) throw Error(ErrorCode::OutOfRange, "Schmidt coefficients must be nonnegative");
  const double dev = std::abs(c.squaredNorm() - 1.0);
  if (dev > kNormTolerance) throw Error(ErrorCode::NotNormalized, "| sum c_i^2 - 1 | = " + fmt(dev));
  std::sort(c.data(), c.data() + c.size(), std::greater<>());
  const int d = static_cast<int>(c.size());
  return SchmidtForm{std::move(c), UnitaryMatrix::identity(d), UnitaryMatrix::identity(d)};
}

const CMatrix& pauli(int i) {
  static const std::array<CMatrix, 3> sigmas = [] {
    const Complex I(0.0, 1.0);
    std::array<CMatrix, 3> s{CMatrix(2, 2), CMatrix(2, 2), CMatrix(2, 2)};
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -I, I, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  if (i < 0 || i > 2) throw Error(ErrorCode::OutOfRange, "Pauli index must be 0, 1 or 2");
  return sigmas[static_cast<std::size_t>(i)];
}

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const int d = rho.dim_local();
  const CMatrix& m = rho.matrix();
  CMatrix out = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out(i, j) += keep == Subsystem::A ? m(i * d + k, j * d + k) : m(k * d + i, k * d + j);
  return out;
}

SchmidtForm schmidt_decompose(const PureState& psi) {
  const int d = psi.dim_local();
  // C_ab = psi_(a,b) = sum_i U_ai s_i conj(V_bi), so right = conj(V).
  CMatrix c(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) c(a, b) = psi.amplitudes()(a * d + b);
  Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SchmidtForm{svd.singularValues(), UnitaryMatrix::from_matrix(svd.matrixU()),
                     UnitaryMatrix::from_matrix(svd.matrixV().conjugate())};
}

BlochForm bloch_decompose(const DensityMatrix& rho) {
  if (rho.dim_local() != 2) throw Error(ErrorCode::BadDimension, "Bloch form needs d = 2");
  const CMatrix id = CMatrix::Identity(2, 2);
  const CMatrix& m = rho.matrix();
  BlochForm b;
  for (int i = 0; i < 3; ++i) {
    b.x(i) = (m * tensor_product(pauli(i), id)).trace().real();
    b.y(i) = (m * tensor_product(id, pauli(i))).trace().real();
    for (int j = 0; j < 3; ++j) b.t(i, j) = (m * tensor_product(pauli(i), pauli(j))).trace().real();
  }
  return b;
}

DensityMatrix bloch_compose(const BlochForm& b) {
  const CMatrix id = CMatrix::Identity(2, 2);
  CMatrix m = CMatrix::Identity(4, 4);
  for (int i = 0; i < 3; ++i) {
    m += b.x(i) * tensor_product(pauli(i), id);
    m += b.y(i) * tensor_product(id, pauli(i));
    for (int j = 0; j < 3; ++j) m += b.t(i, j) * tensor_product(pauli(i), pauli(j));
  }
  return validate_density(m / 4.0, 2);
}

PureState make_max_entangled(int d) {
  require_dim(d);
  CVector v = CVector::Zero(d * d);
  for (int n = 0; n < d; ++n) v(n * d + n) = 1.0 / std::sqrt(static_cast<double>(d));
  return PureState::from_amplitudes(std::move(v), d);
}

DensityMatrix make_isotropic(double p, int d) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "isotropic weight p must lie in [0,1]");
  require_dim(d);
  if (d < 2) throw Error(ErrorCode::BadDimension, "isotropic states need d >= 2");
  const int n = d * d;
  const CMatrix phi = make_max_entangled(d).projector();
  const CMatrix rest = CMatrix::Identity(n, n) - phi;
  return validate_density(p * phi + (1.0 - p) / (n - 1.0) * rest, d);
}

DensityMatrix make_pure_plus_noise(const PureState& psi, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::OutOfRange, "mixing weight x must lie in [0,1]");
  const int n = psi.dim_local() * psi.dim_local();
  return validate_density(x * psi.projector() + (1.0 - x) / n * CMatrix::Identity(n, n), psi.dim_local());
}

PureState make_bell_state(BellState which) {
  const double s = 1.0 / std::sqrt(2.0);
  CVector v = CVector::Zero(4);
  switch (which) {
    case BellState::PhiPlus: v << s, 0, 0, s; break;
    case BellState::PhiMinus: v << s, 0, 0, -s; break;
    case BellState::PsiPlus: v << 0, s, s, 0; break;
    case BellState::PsiMinus: v << 0, s, -s, 0; break;
  }
  return PureState::from_amplitudes(std::move(v), 2);
}

DensityMatrix make_bell_diagonal(const std::array<double, 4>& p) {
  double total = 0.0;
  for (double pk : p) {
    if (pk < 0.0) throw Error(ErrorCode::OutOfRange, "Bell-diagonal weights must be nonnegative");
    total += pk;
  }
  if (std::abs(total - 1.0) > kTraceTolerance) throw Error(ErrorCode::NotUnitTrace, "weights sum to " + fmt(total));
  constexpr std::array<BellState, 4> order{BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                                           BellState::PsiMinus};
  CMatrix m = CMatrix::Zero(4, 4);
  for (std::size_t k = 0; k < 4; ++k) m += p[k] * make_bell_state(order[k]).projector();
  return validate_density(m, 2);
}

DensityMatrix hidden_entanglement_fixture() {
  using C = Complex;
  CMatrix m(4, 4);
  m << C(0.1547077, 0), C(-0.0937756, -0.0097791), C(0.0032410, -0.0780971), C(-0.0490784, -0.0004913),
      C(-0.0937756, 0.0097791), C(0.2401018, 0), C(0.1384087, 0), C(0.0790484, -0.0248949),
      C(0.0032410, 0.0780971), C(0.1384087, 0), C(0.1802319, 0), C(-0.0179682, 0.0434231),
      C(-0.0490784, 0.0004913), C(0.0790484, 0.0248949), C(-0.0179682, -0.0434231), C(0.4249586, 0);
  return validate_density(m, 2);
}

double von_neumann_entropy(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

}  // namespace accord
