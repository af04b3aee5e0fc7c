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

#ifndef ACCORD_QSTATE_HPP_
#define ACCORD_QSTATE_HPP_

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "accord/error.hpp"

namespace accord {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-12;

enum class Subsystem { A, B };

/// A d x d matrix with max |(U^dagger U - I)_ij| <= kUnitaryTolerance.
class UnitaryMatrix {
 public:
  static UnitaryMatrix from_matrix(CMatrix m);
  static UnitaryMatrix identity(int d);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }

  UnitaryMatrix adjoint() const { return UnitaryMatrix(m_.adjoint()); }
  UnitaryMatrix conjugate() const { return UnitaryMatrix(m_.conjugate()); }
  UnitaryMatrix transpose() const { return UnitaryMatrix(m_.transpose()); }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(a.m_ * b.m_);
  }

 private:
  explicit UnitaryMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Normalized bipartite pure state on C^d (x) C^d; subsystem A is the slow index.
class PureState {
 public:
  static PureState from_amplitudes(CVector amplitudes, int d);

  int dim_local() const { return d_; }
  const CVector& amplitudes() const { return amp_; }
  CMatrix projector() const { return amp_ * amp_.adjoint(); }

 private:
  PureState(CVector amp, int d) : amp_(std::move(amp)), d_(d) {}
  CVector amp_;
  int d_;
};

/// Validated two-party density matrix: Hermitian, unit trace and PSD within
/// the tolerances above. Immutable once constructed.
class DensityMatrix {
 public:
  static DensityMatrix from_pure(const PureState& psi);

  int dim_local() const { return d_; }
  int size() const { return d_ * d_; }
  const CMatrix& matrix() const { return m_; }

  double purity() const;
  /// (U_A (x) U_B) rho (U_A (x) U_B)^dagger.
  DensityMatrix conjugated_by(const UnitaryMatrix& u_a, const UnitaryMatrix& u_b) const;
  /// Exchanges the roles of A and B.
  DensityMatrix swapped() const;

  friend DensityMatrix validate_density(const CMatrix& m, int d);

 private:
  DensityMatrix(CMatrix m, int d) : m_(std::move(m)), d_(d) {}
  CMatrix m_;
  int d_;
};

/// Throws Error with NotHermitian, NotUnitTrace, NotPSD or BadDimension.
DensityMatrix validate_density(const CMatrix& m, int d);

/// psi = (left (x) right) sum_i coeffs_i |i>|i>, coefficients sorted descending.
struct SchmidtForm {
  RVector coeffs;
  UnitaryMatrix left;
  UnitaryMatrix right;

  int dim() const { return static_cast<int>(coeffs.size()); }
  PureState recompose() const;

  /// Schmidt-diagonal form with identity local bases. Sorts the input.
  static SchmidtForm from_coefficients(RVector c);
};

/// rho = (I(x)I + x.sigma(x)I + I(x)y.sigma + sum t_ij sigma_i(x)sigma_j) / 4.
struct BlochForm {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

/// Pauli matrices indexed 0,1,2 for sigma_x, sigma_y, sigma_z.
const CMatrix& pauli(int i);

/// (A (x) B)_{(i,k),(j,l)} = A_ij B_kl.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
CMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);
SchmidtForm schmidt_decompose(const PureState& psi);
BlochForm bloch_decompose(const DensityMatrix& rho);
DensityMatrix bloch_compose(const BlochForm& b);

PureState make_max_entangled(int d);
DensityMatrix make_isotropic(double p, int d);
DensityMatrix make_pure_plus_noise(const PureState& psi, double x);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
PureState make_bell_state(BellState which);
/// Probabilities in the order (Phi+, Phi-, Psi+, Psi-).
DensityMatrix make_bell_diagonal(const std::array<double, 4>& p);

/// Published entangled two-qubit state whose correlation matrix has a
/// vanishing singular value, so its accord is zero up to the rounding of
/// its seven-digit entries (about 3e-8). Entry (0,3) is usually written with
/// a "j" for the imaginary unit.
DensityMatrix hidden_entanglement_fixture();

/// -sum lambda log2 lambda over the eigenvalues of a Hermitian PSD matrix.
double von_neumann_entropy(const CMatrix& rho);

}  // namespace accord

#endif  // ACCORD_QSTATE_HPP_
