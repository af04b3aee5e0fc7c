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

#include "accord/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/minima.hpp>

namespace accord {

void OptimizerConfig::validate() const {
  if (inner_restarts < 1 || outer_restarts < 1 || max_iterations < 1) {
    throw Error(ErrorCode::OutOfRange, "optimizer restart and iteration counts must be positive");
  }
  if (!(step_tolerance > 0.0) || !(value_tolerance > 0.0)) {
    throw Error(ErrorCode::OutOfRange, "optimizer tolerances must be positive");
  }
}

namespace search {

namespace {

constexpr double kGrow = 1.618033988749895;
constexpr int kBrentBits = 40;  // boost caps this at half the mantissa
constexpr std::uintmax_t kBrentMaxIter = 200;

}  // namespace

LineResult line_minimize(const std::function<double(double)>& f, double f0, double h, double limit) {
  LineResult best{0.0, f0, 0};
  auto eval = [&](double t) {
    const double v = f(t);
    ++best.evaluations;
    if (v < best.value) {
      best.value = v;
      best.t = t;
    }
    return v;
  };

  h = std::clamp(std::abs(h), 1e-8, limit);
  double a = 0.0, fa = f0;
  double b = h, fb = eval(b);
  double lo = -h, hi = h;
  if (fb >= fa) {
    const double fm = eval(-h);
    if (fm >= fa) {
      lo = -h;
      hi = h;
    } else {
      b = -h;
      fb = fm;
    }
  }
  if (fb < fa) {
    // Walk downhill until the function turns up or we hit the limit.
    for (;;) {
      double c = b + kGrow * (b - a);
      if (std::abs(c) >= limit) c = std::copysign(limit, c);
      const double fc = eval(c);
      if (fc >= fb || std::abs(c) >= limit) {
        lo = std::min(a, c);
        hi = std::max(a, c);
        break;
      }
      a = b;
      fa = fb;
      b = c;
      fb = fc;
    }
  }
  std::uintmax_t iters = kBrentMaxIter;
  boost::math::tools::brent_find_minima([&](double t) { return eval(t); }, lo, hi, kBrentBits, iters);
  return best;
}

RunResult minimize_coordinates(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                               const std::vector<int>& coords, double limit, const OptimizerConfig& cfg) {
  RunResult r;
  r.x = std::move(x0);
  r.value = f(r.x);
  r.evaluations = 1;
  std::vector<double> steps(r.x.size(), 0.3);
  while (r.iterations < cfg.max_iterations) {
    const double before = r.value;
    double max_move = 0.0;
    for (int k : coords) {
      const auto kk = static_cast<std::size_t>(k);
      const double origin = r.x[kk];
      std::vector<double> trial = r.x;
      const LineResult lr = line_minimize(
          [&](double t) {
            trial[kk] = origin + t;
            return f(trial);
          },
          r.value, steps[kk], limit);
      ++r.iterations;
      r.evaluations += lr.evaluations;
      if (lr.value < r.value) {
        r.x[kk] = origin + lr.t;
        r.value = lr.value;
      }
      max_move = std::max(max_move, std::abs(lr.t));
      steps[kk] = std::clamp(2.0 * std::abs(lr.t), 1e-4, 0.5);
    }
    if (before - r.value < cfg.value_tolerance || max_move < cfg.step_tolerance) {
      r.converged = true;
      break;
    }
  }
  return r;
}

CMatrix expi_hermitian(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const CVector phases = es.eigenvalues().unaryExpr([](double l) { return std::polar(1.0, l); }).cast<Complex>();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix reunitarize(const CMatrix& u) {
  Eigen::JacobiSVD<CMatrix> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

RunResult minimize_over_unitary(const std::function<double(const CMatrix&)>& f, CMatrix start,
                                const OptimizerConfig& cfg, Rng& rng) {
  const auto d = static_cast<int>(start.rows());
  const int window = std::max(4, d * d);
  RunResult r;
  r.u = std::move(start);
  r.value = f(r.u);
  r.evaluations = 1;
  double h = 0.5;
  double window_gain = 0.0;
  int window_count = 0;
  while (r.iterations < cfg.max_iterations) {
    CMatrix dir = complex_gaussian(d, d, rng);
    dir = (dir + dir.adjoint()).eval() / 2.0;
    dir /= dir.norm();
    const LineResult lr = line_minimize([&](double t) { return f(expi_hermitian(t * dir) * r.u); }, r.value, h,
                                        std::numbers::pi);
    ++r.iterations;
    r.evaluations += lr.evaluations;
    double gain = 0.0;
    if (lr.value < r.value) {
      gain = r.value - lr.value;
      r.u = expi_hermitian(lr.t * dir) * r.u;
      r.value = lr.value;
      h = std::clamp(2.0 * std::abs(lr.t), 1e-4, 1.0);
    }
    if (r.iterations % 64 == 0) r.u = reunitarize(r.u);
    window_gain += gain;
    if (++window_count == window) {
      if (window_gain < cfg.value_tolerance) {
        r.converged = true;
        break;
      }
      window_gain = 0.0;
      window_count = 0;
    }
  }
  return r;
}

}  // namespace search
}  // namespace accord
