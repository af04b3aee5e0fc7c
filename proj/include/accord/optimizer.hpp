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

#ifndef ACCORD_OPTIMIZER_HPP_
#define ACCORD_OPTIMIZER_HPP_

#include <utility>
#include <vector>

#include "accord/measure_result.hpp"
#include "accord/qstate.hpp"
#include "accord/random.hpp"
#include "accord/search.hpp"

namespace accord {

/// Coordinates of a local unitary.
///
/// For dim == 2, values = (theta, phi, psi, chi) in the chart
///   [[ cos(theta) e^{i phi},         sin(theta) e^{i psi}          ],
///    [-sin(theta) e^{i(chi - psi)},  cos(theta) e^{i(chi - phi)}   ]]
/// which covers all of U(2). For dim > 2, values holds d^2 coordinates of a
/// Hermitian generator H (diagonal first, then real/imaginary parts of the
/// upper triangle row by row) and U = exp(iH).
struct UnitaryParams {
  int dim = 2;
  std::vector<double> values;
};

UnitaryMatrix parameterize_unitary(const UnitaryParams& p);
/// Inverse of the dim == 2 chart.
UnitaryParams angles_of(const UnitaryMatrix& u);

/// Probability that computational-basis outcomes agree after applying
/// U_A (x) U_B: sum_n <n,n| W rho W^dagger |n,n>.
double mcp(const DensityMatrix& rho, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b);

/// || (U_A o U_B) c ||^2: the same probability for sum_i c_i |i,i>.
double mcp_pure_fast(const RVector& c, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b);

/// Tr((U_A L U_B^T) o (U_A^* L U_B^dagger)) with L = diag(c).
double mcp_pure_trace_form(const RVector& c, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b);

/// Both sides of Tr(A)Tr(B) = d Tr(A o B) - sum_{i<j} (a_ii - a_jj)(b_ii - b_jj).
std::pair<Complex, Complex> hadamard_trace_identity(const CMatrix& a, const CMatrix& b);

struct InnerMaxResult {
  double value = 0.0;
  UnitaryMatrix u_a;
  int restarts = 0;
  long sweeps = 0;
  bool converged = true;
};

/// max over U_A of mcp(rho, U_A, U_B). Multi-start monotone ascent from the
/// permutation matrices (d <= 4) or the identity, conj(U_B), the DFT, and
/// cfg.inner_restarts Haar seeds. Each ascent is a sweep of exact two-row
/// rotations: for rows (i, j) the best U(2) mixing is the top eigenvector of
/// the 2x2 difference of the two outcome blocks. Throws NoConvergence if the
/// best ascent ran out of sweeps.
InnerMaxResult inner_max(const DensityMatrix& rho, const UnitaryMatrix& u_b, const OptimizerConfig& cfg);

/// min over U_B of inner_max. Outer descent from the identity, the DFT, the
/// DFT composed with the eigenbasis of rho_B, and cfg.outer_restarts Haar
/// seeds: coordinate Brent searches over the angle chart for d == 2,
/// random-direction line searches for d > 2. Each run ends with a
/// nonsmooth descent along the shortest convex combination of the U_B
/// gradients of Alice's near-optimal responses.
///
/// The winning U_B is re-maximized with an independent restart pool. If that
/// pool does better, its response joins the inner seeds and the outer stage
/// repeats (at most four rounds); a remaining gap above 10 * value_tolerance
/// raises NoConvergence.
MeasureResult omcp_numerical(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace accord

#endif  // ACCORD_OPTIMIZER_HPP_
