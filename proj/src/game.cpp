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

#include "accord/game.hpp"

#include <algorithm>
#include <limits>

#include "accord/optimizer.hpp"

namespace accord {

namespace {

constexpr std::uint64_t kBobStream = 0xb0b;
constexpr std::uint64_t kAliceStream = 0xa11ce;

int draw(const std::vector<double>& p, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = u(rng);
  double acc = 0.0;
  int last = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    acc += p[i];
    last = static_cast<int>(i);
    if (r < acc) return last;
  }
  return last;
}

}  // namespace

void GameConfig::validate() const {
  if (n_b < 1 || n_a < 1) throw Error(ErrorCode::OutOfRange, "unitary counts must be positive");
  if (shots < 0) throw Error(ErrorCode::OutOfRange, "shots must be nonnegative");
}

std::vector<double> joint_distribution(const DensityMatrix& rho, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b) {
  const int d = rho.dim_local();
  if (u_a.dim() != d || u_b.dim() != d) throw Error(ErrorCode::BadDimension, "unitary dimension mismatch");
  const CMatrix u = tensor_product(u_a.matrix(), u_b.matrix());
  std::vector<double> p(static_cast<std::size_t>(d * d));
  double total = 0.0;
  for (int k = 0; k < d * d; ++k) {
    const auto row = u.row(k);
    const double v = std::max(0.0, (row * rho.matrix() * row.adjoint())(0, 0).real());
    p[static_cast<std::size_t>(k)] = v;
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

std::pair<int, int> sample_measurement(const DensityMatrix& rho, const UnitaryMatrix& u_a, const UnitaryMatrix& u_b,
                                       Rng& rng) {
  const int k = draw(joint_distribution(rho, u_a, u_b), rng);
  const int d = rho.dim_local();
  return {k / d, k % d};
}

GameResult simulate_game(const DensityMatrix& rho, const GameConfig& cfg) {
  cfg.validate();
  const int d = rho.dim_local();
  GameResult result;
  result.per_b_maxima.reserve(static_cast<std::size_t>(cfg.n_b));
  std::vector<long> counts;
  const bool record = cfg.shots > 0 && cfg.record_counts;
  if (record) counts.reserve(static_cast<std::size_t>(cfg.n_b) * static_cast<std::size_t>(cfg.n_a));

  result.estimate = std::numeric_limits<double>::infinity();
  for (int b = 0; b < cfg.n_b; ++b) {
    Rng bob = make_rng(cfg.seed, {kBobStream, static_cast<std::uint64_t>(b)});
    const UnitaryMatrix u_b = haar_random_unitary(d, bob);
    double best = 0.0;
    for (int a = 0; a < cfg.n_a; ++a) {
      Rng alice = make_rng(cfg.seed, {kAliceStream, static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(a)});
      const UnitaryMatrix u_a = haar_random_unitary(d, alice);
      double fraction;
      if (cfg.shots == 0) {
        fraction = std::clamp(mcp(rho, u_a, u_b), 0.0, 1.0);
      } else {
        const std::vector<double> p = joint_distribution(rho, u_a, u_b);
        long hits = 0;
        for (int s = 0; s < cfg.shots; ++s) {
          const int k = draw(p, alice);
          if (k / d == k % d) ++hits;
        }
        if (record) counts.push_back(hits);
        fraction = static_cast<double>(hits) / cfg.shots;
      }
      best = std::max(best, fraction);
    }
    result.per_b_maxima.push_back(best);
    result.estimate = std::min(result.estimate, best);
  }
  if (record) result.empirical_distribution = std::move(counts);
  return result;
}

}  // namespace accord
