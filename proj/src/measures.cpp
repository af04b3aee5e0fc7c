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

#include "accord/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "accord/exact.hpp"
#include "accord/random.hpp"

namespace accord {

namespace {

void require_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.dim_local() != 2) throw Error(ErrorCode::BadDimension, std::string(what) + " is defined for two qubits");
}

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Entropy of a qubit with Bloch vector length r.
double qubit_entropy(double r) {
  r = std::min(r, 1.0);
  return -xlog2x((1.0 + r) / 2.0) - xlog2x((1.0 - r) / 2.0);
}

Eigen::Vector3d direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

}  // namespace

void DiscordConfig::validate() const {
  if (restarts < 1) throw Error(ErrorCode::OutOfRange, "discord restarts must be positive");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::OutOfRange, "discord tolerance must be positive");
}

double concurrence(const DensityMatrix& rho) {
  require_qubits(rho, "concurrence");
  const CMatrix yy = tensor_product(pauli(1), pauli(1));
  const CMatrix flipped = yy * rho.matrix().conjugate() * yy;
  // The square roots of the eigenvalues of rho rho~ are the singular values
  // of sqrt(rho) sqrt(rho~), which stay accurate near zero.
  auto psd_sqrt = [](const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    const RVector root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return CMatrix(es.eigenvectors() * root.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint());
  };
  Eigen::JacobiSVD<CMatrix> svd(psd_sqrt(rho.matrix()) * psd_sqrt(flipped));
  std::array<double, 4> l{};
  for (int i = 0; i < 4; ++i) l[static_cast<std::size_t>(i)] = svd.singularValues()(i);
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double singlet_fraction_pure(const SchmidtForm& s) { return omcp_pure(s).value; }

MeasureResult singlet_fraction_numerical(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  cfg.validate();
  const int d = rho.dim_local();
  const CMatrix& m = rho.matrix();
  auto negative_overlap = [&](const CMatrix& u) {
    CVector v(d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) v(a * d + b) = u(a, b);
    return -(v.adjoint() * m * v)(0, 0).real() / d;
  };
  Diagnostics diag;
  diag.best_value = -1.0;
  diag.worst_value = 2.0;
  CMatrix best_u;
  bool best_converged = true;
  for (int run = 0; run < cfg.outer_restarts; ++run) {
    Rng rng = make_rng(cfg.seed, {0x5f, static_cast<std::uint64_t>(run)});
    const CMatrix start = run == 0 ? CMatrix::Identity(d, d) : haar_random_unitary(d, rng).matrix();
    const search::RunResult r = search::minimize_over_unitary(negative_overlap, start, cfg, rng);
    diag.iterations += r.iterations;
    diag.evaluations += r.evaluations;
    if (!r.converged) ++diag.unconverged_runs;
    diag.worst_value = std::min(diag.worst_value, -r.value);
    if (-r.value > diag.best_value) {
      diag.best_value = -r.value;
      best_u = r.u;
      best_converged = r.converged;
    }
  }
  diag.outer_restarts = cfg.outer_restarts;
  diag.u_a = UnitaryMatrix::from_matrix(search::reunitarize(best_u));
  MeasureResult result{diag.best_value, Method::Numerical, diag};
  if (!best_converged) throw NoConvergence("singlet fraction search ran out of iterations", result);
  return result;
}

double mutual_information(const DensityMatrix& rho) {
  return von_neumann_entropy(partial_trace(rho, Subsystem::A)) + von_neumann_entropy(partial_trace(rho, Subsystem::B)) -
         von_neumann_entropy(rho.matrix());
}

double j_function(double a) {
  if (!(a >= -1e-12 && a <= 1.0 + 1e-12)) throw Error(ErrorCode::OutOfRange, "J is defined on [0,1]");
  a = std::clamp(a, 0.0, 1.0);
  return (xlog2x(1.0 + a) + xlog2x(1.0 - a)) / 2.0;
}

double discord_isotropic(double p) {
  const DensityMatrix rho = make_isotropic(p, 2);
  return mutual_information(rho) - j_function(accord_from_omcp(omcp_isotropic(p, 2).value, 2));
}

double discord_bell_family(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::OutOfRange, "family parameter x must lie in [0,1]");
  return 1.5 + xlog2x(x / 2.0) + xlog2x((1.0 - x) / 2.0) - j_function(0.5 + std::abs(x - 0.5));
}

MeasureResult discord_numerical(const DensityMatrix& rho, const DiscordConfig& cfg) {
  require_qubits(rho, "discord");
  cfg.validate();
  const BlochForm b = bloch_decompose(rho);
  const bool on_a = cfg.measured_side == Subsystem::A;
  // Measuring side X along n leaves the other side with Bloch vectors
  // (other +- C n)/(1 +- local.n) at probabilities (1 +- local.n)/2.
  const Eigen::Vector3d local = on_a ? b.x : b.y;
  const Eigen::Vector3d other = on_a ? b.y : b.x;
  const Eigen::Matrix3d corr = on_a ? Eigen::Matrix3d(b.t.transpose()) : b.t;
  const double s_other = qubit_entropy(other.norm());

  auto neg_classical = [&](const std::vector<double>& angles) {
    const Eigen::Vector3d n = direction(angles[0], angles[1]);
    const double ln = local.dot(n);
    const Eigen::Vector3d cn = corr * n;
    double cond = 0.0;
    for (double sign : {1.0, -1.0}) {
      const double w = 1.0 + sign * ln;
      if (w <= 0.0) continue;
      cond += w / 2.0 * qubit_entropy((other + sign * cn).norm() / w);
    }
    return cond - s_other;
  };

  OptimizerConfig search_cfg;
  search_cfg.value_tolerance = cfg.tolerance;
  Diagnostics diag;
  diag.measured_side = cfg.measured_side;
  diag.best_value = 1.0;
  diag.worst_value = -1.0;
  bool best_converged = true;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int run = 0; run < cfg.restarts; ++run) {
    std::vector<double> start;
    switch (run) {
      case 0: start = {0.0, 0.0}; break;
      case 1: start = {std::numbers::pi / 2, 0.0}; break;
      case 2: start = {std::numbers::pi / 2, std::numbers::pi / 2}; break;
      default: {
        Rng rng = make_rng(cfg.seed, {0xd1, static_cast<std::uint64_t>(run)});
        const double theta = std::acos(1.0 - 2.0 * unit(rng));
        start = {theta, 2.0 * std::numbers::pi * unit(rng)};
      }
    }
    const search::RunResult r = search::minimize_coordinates(neg_classical, start, {0, 1}, std::numbers::pi, search_cfg);
    diag.iterations += r.iterations;
    diag.evaluations += r.evaluations;
    if (!r.converged) ++diag.unconverged_runs;
    diag.worst_value = std::max(diag.worst_value, r.value);
    if (r.value < diag.best_value) {
      diag.best_value = r.value;
      best_converged = r.converged;
    }
  }
  diag.outer_restarts = cfg.restarts;
  const double classical = -diag.best_value;
  diag.best_value = classical;
  diag.worst_value = -diag.worst_value;
  MeasureResult result{mutual_information(rho) - classical, Method::Numerical, diag};
  if (!best_converged) throw NoConvergence("discord measurement search ran out of iterations", result);
  return result;
}

double chsh_parameter(const DensityMatrix& rho) {
  require_qubits(rho, "CHSH parameter");
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(bloch_decompose(rho).t);
  const Eigen::Vector3d s = svd.singularValues();  // descending
  return s(0) * s(0) + s(1) * s(1);
}

}  // namespace accord
