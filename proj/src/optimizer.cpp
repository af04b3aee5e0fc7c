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

#include "accord/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "accord/exact.hpp"
#include "accord/kernels.hpp"

namespace accord {

namespace {

enum StreamTag : std::uint64_t { kInnerPool = 1, kOuterStart = 2, kOuterRun = 3, kVerifyPool = 4 };
constexpr int kMaxRounds = 4;
constexpr std::size_t kMaxActive = 32;

std::vector<Complex> row_major(const CMatrix& m) {
  std::vector<Complex> out(static_cast<std::size_t>(m.rows() * m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
  return out;
}

CMatrix from_row_major(const std::vector<Complex>& a, int d) {
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = a[static_cast<std::size_t>(i * d + j)];
  return m;
}

// For fixed U_B the coincidence probability is sum_n u_n M_n u_n^dagger with
// u_n the n-th row of U_A and M_n = <n|_B (I (x) U_B) rho (I (x) U_B)^dagger |n>_B.
class InnerProblem {
 public:
  InnerProblem(const std::vector<Complex>& rho, int d, const CMatrix& u_b) : d_(d), m_(static_cast<std::size_t>(d * d * d)) {
    const std::size_t n_full = static_cast<std::size_t>(d) * d;
    const std::size_t dd = static_cast<std::size_t>(d);
    const std::vector<Complex> ub = row_major(u_b);
    for (std::size_t n = 0; n < dd; ++n) {
      Complex* mn = &m_[n * dd * dd];
      const Complex* row = &ub[n * dd];
      for (std::size_t a = 0; a < dd; ++a) {
        for (std::size_t a2 = a; a2 < dd; ++a2) {
          const Complex v = kernels::sesquilinear(&rho[a * dd * n_full + a2 * dd], n_full, row, dd);
          mn[a * dd + a2] = v;
          mn[a2 * dd + a] = std::conj(v);
        }
        mn[a * dd + a] = Complex(mn[a * dd + a].real(), 0.0);
      }
    }
  }

  double value(const std::vector<Complex>& ua) const {
    const std::size_t dd = static_cast<std::size_t>(d_);
    double v = 0.0;
    for (std::size_t n = 0; n < dd; ++n) v += kernels::sesquilinear(&m_[n * dd * dd], dd, &ua[n * dd], dd).real();
    return v;
  }

  struct Ascent {
    double value;
    long sweeps;
    bool converged;
  };

  // Jacobi-style ascent; every rotation is the exact maximizer over the
  // U(2) acting on the two rows, so the value never decreases.
  Ascent ascend(std::vector<Complex>& ua, double tol, int max_sweeps) const {
    const std::size_t dd = static_cast<std::size_t>(d_);
    std::vector<Complex> mi_ui(dd), mi_uj(dd), mj_ui(dd), mj_uj(dd), ri(dd), rj(dd);
    long sweeps = 0;
    double last_gain = 0.0;
    while (sweeps < max_sweeps) {
      ++sweeps;
      double gain = 0.0;
      for (std::size_t i = 0; i + 1 < dd; ++i) {
        for (std::size_t j = i + 1; j < dd; ++j) {
          const Complex* ui = &ua[i * dd];
          const Complex* uj = &ua[j * dd];
          const Complex* mi = &m_[i * dd * dd];
          const Complex* mj = &m_[j * dd * dd];
          for (std::size_t k = 0; k < dd; ++k) {
            Complex s1, s2, s3, s4;
            for (std::size_t l = 0; l < dd; ++l) {
              s1 += mi[k * dd + l] * std::conj(ui[l]);
              s2 += mi[k * dd + l] * std::conj(uj[l]);
              s3 += mj[k * dd + l] * std::conj(ui[l]);
              s4 += mj[k * dd + l] * std::conj(uj[l]);
            }
            mi_ui[k] = s1;
            mi_uj[k] = s2;
            mj_ui[k] = s3;
            mj_uj[k] = s4;
          }
          Complex a00, a01, a11, b00, b01, b11;
          for (std::size_t k = 0; k < dd; ++k) {
            a00 += ui[k] * mi_ui[k];
            a01 += ui[k] * mi_uj[k];
            a11 += uj[k] * mi_uj[k];
            b00 += ui[k] * mj_ui[k];
            b01 += ui[k] * mj_uj[k];
            b11 += uj[k] * mj_uj[k];
          }
          const double k00 = a00.real() - b00.real();
          const double k11 = a11.real() - b11.real();
          const Complex k01 = a01 - b01;
          const double half = 0.5 * (k00 - k11);
          const double radius = std::sqrt(half * half + std::norm(k01));
          const double top = 0.5 * (k00 + k11) + radius;
          const double step_gain = top - k00;
          if (!(step_gain > 1e-15)) continue;
          Complex y0, y1;
          if (k00 >= k11) {
            y0 = Complex(top - k11, 0.0);
            y1 = std::conj(k01);
          } else {
            y0 = k01;
            y1 = Complex(top - k00, 0.0);
          }
          const double norm = std::sqrt(std::norm(y0) + std::norm(y1));
          y0 /= norm;
          y1 /= norm;
          const Complex alpha = std::conj(y0), beta = std::conj(y1);
          for (std::size_t k = 0; k < dd; ++k) {
            ri[k] = alpha * ui[k] + beta * uj[k];
            rj[k] = -y1 * ui[k] + y0 * uj[k];
          }
          std::copy(ri.begin(), ri.end(), ua.begin() + static_cast<std::ptrdiff_t>(i * dd));
          std::copy(rj.begin(), rj.end(), ua.begin() + static_cast<std::ptrdiff_t>(j * dd));
          gain += step_gain;
        }
      }
      last_gain = gain;
      if (gain < tol) break;
    }
    return Ascent{value(ua), sweeps, last_gain < tol || last_gain <= 10.0 * tol};
  }

 private:
  int d_;
  std::vector<Complex> m_;
};

std::vector<CMatrix> permutation_matrices(int d) {
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CMatrix> out;
  do {
    CMatrix p = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    out.push_back(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<CMatrix> haar_pool(int d, int count, std::uint64_t seed, std::uint64_t tag) {
  std::vector<CMatrix> pool;
  pool.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rng rng = make_rng(seed, {tag, static_cast<std::uint64_t>(i)});
    pool.push_back(haar_random_unitary(d, rng).matrix());
  }
  return pool;
}

struct InnerSolution {
  double value = -1.0;
  std::vector<Complex> ua;
  int restarts = 0;
  long sweeps = 0;
  bool converged = true;
};

struct Response {
  double value;
  CMatrix ua;
};

// Fixed seeds plus a Haar pool that stays the same across outer iterates, so
// the outer objective is a deterministic function of U_B.
class InnerSolver {
 public:
  InnerSolver(const DensityMatrix& rho, const OptimizerConfig& cfg, std::vector<CMatrix> pool)
      : d_(rho.dim_local()), rho_(row_major(rho.matrix())), cfg_(cfg), pool_(std::move(pool)) {
    fixed_ = d_ <= 4 ? permutation_matrices(d_) : std::vector<CMatrix>{CMatrix::Identity(d_, d_)};
    fixed_.push_back(dft_unitary(d_).matrix());
  }

  // Also runs ascents from `extra`, and reports every endpoint to `all`.
  InnerSolution solve(const CMatrix& u_b, const std::vector<CMatrix>* extra = nullptr,
                      std::vector<Response>* all = nullptr) const {
    const InnerProblem problem(rho_, d_, u_b);
    InnerSolution best;
    auto run = [&](const CMatrix& seed) {
      std::vector<Complex> ua = row_major(seed);
      const auto ascent = problem.ascend(ua, cfg_.value_tolerance, cfg_.max_iterations);
      ++best.restarts;
      best.sweeps += ascent.sweeps;
      if (all) all->push_back({ascent.value, from_row_major(ua, d_)});
      if (ascent.value > best.value) {
        best.value = ascent.value;
        best.ua = std::move(ua);
        best.converged = ascent.converged;
      }
    };
    for (const CMatrix& s : fixed_) run(s);
    run(u_b.conjugate());
    for (const CMatrix& s : pool_) run(s);
    for (const CMatrix& s : learned_) run(s);
    if (extra)
      for (const CMatrix& s : *extra) run(s);
    return best;
  }

  // Extra seed kept for all later solves.
  void learn(const CMatrix& u_a) { learned_.push_back(u_a); }

  // Hermitian G with d/dt mcp(U_A, exp(itH) U_B) = tr(H G) at t = 0.
  CMatrix gradient_b(const CMatrix& u_a, const CMatrix& u_b) const {
    const int d = d_;
    const int n_full = d * d;
    CMatrix c(d, d);
    for (int n = 0; n < d; ++n) {
      CMatrix nn = CMatrix::Zero(d, d);
      for (int b = 0; b < d; ++b)
        for (int b2 = 0; b2 < d; ++b2) {
          Complex v;
          for (int a = 0; a < d; ++a)
            for (int a2 = 0; a2 < d; ++a2)
              v += u_a(n, a) * rho_[static_cast<std::size_t>((a * d + b) * n_full + a2 * d + b2)] * std::conj(u_a(n, a2));
          nn(b, b2) = v;
        }
      const CVector right = nn * u_b.row(n).adjoint();
      for (int m = 0; m < d; ++m) c(m, n) = (u_b.row(m) * right)(0, 0);
    }
    const CMatrix x = Complex(0.0, 2.0) * c;
    return (x + x.adjoint()) / 2.0;
  }

  int d() const { return d_; }

 private:
  int d_;
  std::vector<Complex> rho_;
  OptimizerConfig cfg_;
  std::vector<CMatrix> pool_;
  std::vector<CMatrix> fixed_;
  std::vector<CMatrix> learned_;
};

// Smallest-norm point of the convex hull of the given Hermitian matrices,
// by projected gradient on the simplex of weights.
CMatrix min_norm_hull_point(const std::vector<CMatrix>& g) {
  const int k = static_cast<int>(g.size());
  Eigen::MatrixXd q(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) q(i, j) = q(j, i) = (g[i].adjoint() * g[j]).trace().real();
  const double lipschitz = 2.0 * std::max(q.diagonal().maxCoeff(), 1e-300) * k;
  Eigen::VectorXd w = Eigen::VectorXd::Constant(k, 1.0 / k);
  Eigen::VectorXd u(k);
  for (int it = 0; it < 4000; ++it) {
    const Eigen::VectorXd next = w - (2.0 / lipschitz) * (q * w);
    // Euclidean projection onto the simplex.
    u = next;
    std::sort(u.data(), u.data() + k, std::greater<>());
    double cum = 0.0, theta = 0.0;
    for (int i = 0; i < k; ++i) {
      cum += u(i);
      const double t = (cum - 1.0) / (i + 1);
      if (u(i) - t > 0.0) theta = t;
    }
    const Eigen::VectorXd projected = (next.array() - theta).max(0.0).matrix();
    const double moved = (projected - w).cwiseAbs().maxCoeff();
    w = projected;
    if (moved < 1e-14) break;
  }
  CMatrix out = CMatrix::Zero(g[0].rows(), g[0].cols());
  for (int i = 0; i < k; ++i) out += w(i) * g[static_cast<std::size_t>(i)];
  return out;
}

struct PolishResult {
  CMatrix u;
  double value;
  long iterations = 0;
  long evaluations = 0;
};

// Nonsmooth descent for f(U_B) = max_A mcp(A, U_B). At a minimum several of
// Alice's local maxima tie, so f has a kink that random directions rarely
// enter. Every response within eps of the max contributes its gradient in
// U_B (Alice held fixed); the shortest vector in their convex hull is a
// descent direction unless the point is eps-stationary, in which case eps
// shrinks.
PolishResult polish(const InnerSolver& solver, CMatrix u, const OptimizerConfig& cfg, long& inner_calls) {
  PolishResult r{std::move(u), 0.0};
  std::vector<CMatrix> tracked;
  double eps = 1e-3;
  double stationary = 1e-2;
  for (; r.iterations < cfg.max_iterations; ++r.iterations) {
    std::vector<Response> all;
    r.value = solver.solve(r.u, &tracked, &all).value;
    ++inner_calls;
    std::sort(all.begin(), all.end(), [](const Response& a, const Response& b) { return a.value > b.value; });
    std::vector<CMatrix> grads;
    std::vector<CMatrix> active;
    for (const Response& resp : all) {
      if (resp.value < r.value - eps || active.size() == kMaxActive) break;
      CMatrix g = solver.gradient_b(resp.ua, r.u);
      // Row phases of U_A leave mcp unchanged; such copies share a gradient.
      const bool seen = std::any_of(grads.begin(), grads.end(), [&](const CMatrix& h) { return (h - g).norm() < 1e-9; });
      if (seen) continue;
      active.push_back(resp.ua);
      grads.push_back(std::move(g));
    }
    const CMatrix g = min_norm_hull_point(grads);
    const double gnorm = g.norm();
    double gain = 0.0;
    if (gnorm > stationary) {
      const CMatrix dir = -g / gnorm;
      const CMatrix base = r.u;
      const search::LineResult lr = search::line_minimize(
          [&](double t) {
            ++inner_calls;
            return solver.solve(search::expi_hermitian(t * dir) * base, &active).value;
          },
          r.value, std::clamp(eps / gnorm, 1e-8, 0.5), std::numbers::pi);
      r.evaluations += lr.evaluations;
      if (lr.value < r.value) {
        gain = r.value - lr.value;
        r.u = search::reunitarize(search::expi_hermitian(lr.t * dir) * base);
      }
    }
    tracked = std::move(active);
    if (gain < 0.1 * cfg.value_tolerance) {
      if (eps <= cfg.value_tolerance) break;
      eps /= 10.0;
      stationary /= 10.0;
    }
  }
  r.value = solver.solve(r.u, &tracked).value;
  ++inner_calls;
  return r;
}

}  // namespace

UnitaryMatrix parameterize_unitary(const UnitaryParams& p) {
  const int d = p.dim;
  if (d < 2) throw Error(ErrorCode::BadDimension, "unitary parameterization needs d >= 2");
  if (d == 2) {
    if (p.values.size() != 4) throw Error(ErrorCode::BadDimension, "d = 2 chart takes 4 angles");
    const double th = p.values[0], phi = p.values[1], psi = p.values[2], chi = p.values[3];
    CMatrix u(2, 2);
    u << std::polar(std::cos(th), phi), std::polar(std::sin(th), psi), std::polar(-std::sin(th), chi - psi),
        std::polar(std::cos(th), chi - phi);
    return UnitaryMatrix::from_matrix(std::move(u));
  }
  if (p.values.size() != static_cast<std::size_t>(d * d)) {
    throw Error(ErrorCode::BadDimension, "generator chart takes d^2 coordinates");
  }
  CMatrix h = CMatrix::Zero(d, d);
  std::size_t k = 0;
  for (int i = 0; i < d; ++i) h(i, i) = p.values[k++];
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      h(i, j) = Complex(p.values[k], p.values[k + 1]);
      h(j, i) = std::conj(h(i, j));
      k += 2;
    }
  return UnitaryMatrix::from_matrix(search::expi_hermitian(h));
}

UnitaryParams angles_of(const UnitaryMatrix& u) {
  if (u.dim() != 2) throw Error(ErrorCode::BadDimension, "angle chart is defined for d = 2");
  const CMatrix& m = u.matrix();
  const double th = std::atan2(std::abs(m(0, 1)), std::abs(m(0, 0)));
  const double phi = std::abs(m(0, 0)) > 0.0 ? std::arg(m(0, 0)) : 0.0;
  const double psi = std::abs(m(0, 1)) > 0.0 ? std::arg(m(0, 1)) : 0.0;
  // det U = e^{i chi}
  const double chi = std::arg(m.determinant());
  return UnitaryParams{2, {th, phi, psi, chi}};
}

double mcp(const DensityMatrix& rho, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b) {
  const int d = rho.dim_local();
  if (u_a.dim() != d || u_b.dim() != d) throw Error(ErrorCode::BadDimension, "local unitary dimension mismatch");
  const std::vector<Complex> r = row_major(rho.matrix());
  const std::size_t n_full = static_cast<std::size_t>(d) * d;
  std::vector<Complex> w(n_full);
  double total = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) w[static_cast<std::size_t>(a * d + b)] = u_a.matrix()(n, a) * u_b.matrix()(n, b);
    total += kernels::sesquilinear(r.data(), n_full, w.data(), n_full).real();
  }
  return total;
}

double mcp_pure_fast(const RVector& c, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b) {
  const int d = static_cast<int>(c.size());
  if (u_a.dim() != d || u_b.dim() != d) throw Error(ErrorCode::BadDimension, "local unitary dimension mismatch");
  const std::vector<Complex> a = row_major(u_a.matrix());
  const std::vector<Complex> b = row_major(u_b.matrix());
  return kernels::hadamard_coincidence(a.data(), b.data(), c.data(), static_cast<std::size_t>(d));
}

double mcp_pure_trace_form(const RVector& c, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b) {
  const int d = static_cast<int>(c.size());
  if (u_a.dim() != d || u_b.dim() != d) throw Error(ErrorCode::BadDimension, "local unitary dimension mismatch");
  const CMatrix lambda = c.cast<Complex>().asDiagonal();
  const CMatrix x = u_a.matrix() * lambda * u_b.matrix().transpose();
  const CMatrix y = u_a.matrix().conjugate() * lambda * u_b.matrix().adjoint();
  return x.cwiseProduct(y).trace().real();
}

std::pair<Complex, Complex> hadamard_trace_identity(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::BadDimension, "Hadamard trace identity needs equal square matrices");
  }
  const Eigen::Index d = a.rows();
  const Complex lhs = a.trace() * b.trace();
  Complex spread(0.0, 0.0);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) spread += (a(i, i) - a(j, j)) * (b(i, i) - b(j, j));
  const Complex rhs = static_cast<double>(d) * a.cwiseProduct(b).trace() - spread;
  return {lhs, rhs};
}

InnerMaxResult inner_max(const DensityMatrix& rho, const UnitaryMatrix& u_b, const OptimizerConfig& cfg) {
  cfg.validate();
  const int d = rho.dim_local();
  if (u_b.dim() != d) throw Error(ErrorCode::BadDimension, "local unitary dimension mismatch");
  const InnerSolver solver(rho, cfg, haar_pool(d, cfg.inner_restarts, cfg.seed, kInnerPool));
  InnerSolution s = solver.solve(u_b.matrix());
  UnitaryMatrix ua = UnitaryMatrix::from_matrix(search::reunitarize(from_row_major(s.ua, d)));
  if (!s.converged) {
    Diagnostics diag;
    diag.inner_restarts = s.restarts;
    diag.best_value = s.value;
    diag.u_a = ua;
    diag.u_b = u_b;
    throw NoConvergence("inner maximization ran out of sweeps", MeasureResult{s.value, Method::Numerical, diag});
  }
  return InnerMaxResult{s.value, std::move(ua), s.restarts, s.sweeps, s.converged};
}

MeasureResult omcp_numerical(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  cfg.validate();
  const int d = rho.dim_local();
  if (d < 2) throw Error(ErrorCode::BadDimension, "OMCP needs d >= 2");
  InnerSolver solver(rho, cfg, haar_pool(d, cfg.inner_restarts, cfg.seed, kInnerPool));
  const InnerSolver verifier(rho, cfg, haar_pool(d, std::max(8, 2 * cfg.inner_restarts), cfg.seed, kVerifyPool));

  long inner_calls = 0;
  auto outer_value = [&](const CMatrix& u_b) {
    ++inner_calls;
    return solver.solve(u_b).value;
  };

  // F W^dagger makes Bob's outcomes uniform on every eigenvector of rho_B.
  const Eigen::SelfAdjointEigenSolver<CMatrix> marginal(partial_trace(rho, Subsystem::B));
  const CMatrix dft = dft_unitary(d).matrix();
  std::vector<CMatrix> starts{CMatrix::Identity(d, d), dft, dft * marginal.eigenvectors().adjoint()};
  for (CMatrix& u : haar_pool(d, cfg.outer_restarts, cfg.seed, kOuterStart)) starts.push_back(std::move(u));

  Diagnostics diag;
  diag.outer_restarts = static_cast<int>(starts.size());
  InnerSolution at_best, check;
  CMatrix best_ub;
  bool best_converged = true;
  // The outer descent can settle where the inner ascent misses the global
  // maximum. The verifier's answer there becomes a permanent inner seed and
  // the outer stage is repeated.
  for (int round = 0; round < kMaxRounds; ++round) {
    diag.best_value = 2.0;
    diag.worst_value = -1.0;
    for (std::size_t run = 0; run < starts.size(); ++run) {
      search::RunResult r;
      if (d == 2) {
        const UnitaryParams p0 = angles_of(UnitaryMatrix::from_matrix(starts[run]));
        r = search::minimize_coordinates(
            [&](const std::vector<double>& x) {
              return outer_value(parameterize_unitary(UnitaryParams{2, x}).matrix());
            },
            p0.values, {0, 1, 2}, std::numbers::pi, cfg);
        r.u = parameterize_unitary(UnitaryParams{2, r.x}).matrix();
      } else {
        Rng rng = make_rng(cfg.seed, {kOuterRun, static_cast<std::uint64_t>(round), run});
        r = search::minimize_over_unitary(outer_value, starts[run], cfg, rng);
      }
      const PolishResult pr = polish(solver, r.u, cfg, inner_calls);
      if (pr.value < r.value) {
        r.u = pr.u;
        r.value = pr.value;
      }
      diag.iterations += r.iterations + pr.iterations;
      if (!r.converged) ++diag.unconverged_runs;
      diag.worst_value = std::max(diag.worst_value, r.value);
      if (r.value < diag.best_value) {
        diag.best_value = r.value;
        best_ub = r.u;
        best_converged = r.converged;
      }
    }

    best_ub = search::reunitarize(best_ub);
    at_best = solver.solve(best_ub);
    check = verifier.solve(best_ub);
    inner_calls += 2;
    if (check.value - at_best.value <= 10.0 * cfg.value_tolerance) break;
    solver.learn(from_row_major(check.ua, d));
  }

  const bool use_check = check.value > at_best.value;
  const InnerSolution& winner = use_check ? check : at_best;
  diag.inner_restarts = at_best.restarts;
  diag.evaluations = inner_calls;
  diag.best_value = winner.value;
  diag.u_b = UnitaryMatrix::from_matrix(best_ub);
  diag.u_a = UnitaryMatrix::from_matrix(search::reunitarize(from_row_major(winner.ua, d)));
  MeasureResult result{winner.value, Method::Numerical, diag};

  if (check.value - at_best.value > 10.0 * cfg.value_tolerance) {
    throw NoConvergence("inner maximum at the optimal U_B not reproduced by an independent restart pool", result);
  }
  if (!best_converged || !winner.converged) {
    throw NoConvergence("best outer run stopped at max_iterations", result);
  }
  return result;
}

}  // namespace accord
