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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Reference values come from tests/oracle.hpp, never from the
// closed forms under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "accord/exact.hpp"
#include "accord/game.hpp"
#include "accord/measures.hpp"
#include "accord/optimizer.hpp"
#include "accord/sampling.hpp"
#include "oracle.hpp"

namespace {

using namespace accord;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Bound {
  int d;
  double omcp;
};

std::vector<Bound> g_bounds;  // every numerical OMCP from criteria 1 and 2

OptimizerConfig pinned(int d, std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.inner_restarts = 16;
  cfg.outer_restarts = d == 2 ? 16 : d == 3 ? 8 : 4;
  cfg.seed = seed;
  return cfg;
}

double side_min_discord(const DensityMatrix& rho, std::uint64_t seed) {
  DiscordConfig dc;
  dc.seed = seed;
  const double a = discord_numerical(rho, dc).value;
  dc.measured_side = Subsystem::B;
  return std::min(a, discord_numerical(rho, dc).value);
}

bool criterion1(std::string& detail) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  int bad = 0;
  for (int d : {2, 3, 4}) {
    Rng rng = make_rng(1001, {static_cast<std::uint64_t>(d)});
    for (int i = 0; i < 50; ++i) {
      const PureState psi = random_pure_state(d, rng);
      const double s = oracle::schmidt_sum(psi.amplitudes(), d);
      const double v = omcp_numerical(DensityMatrix::from_pure(psi), pinned(d, i)).value;
      g_bounds.push_back({d, v});
      const double err = std::abs(v - s * s / d);
      worst = std::max(worst, err);
      bad += err > 1e-4;
    }
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "150 pure states, %d above 1e-4, worst error %.2e, %.1f s (limit 300 s)", bad, worst,
                secs);
  detail = buf;
  return bad == 0 && secs < 300.0;
}

bool criterion2(std::string& detail) {
  const auto t0 = Clock::now();
  Rng rng = make_rng(1002, {});
  double worst = 0.0;
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_two_qubit_mixed(rng, i % 2 ? Ensemble::RealGaussian : Ensemble::HaarComplex);
    const double s = oracle::smallest_singular(oracle::correlation(rho.matrix()));
    const double v = omcp_numerical(rho, pinned(2, i)).value;
    g_bounds.push_back({2, v});
    const double err = std::abs(v - (1 + s) / 2);
    worst = std::max(worst, err);
    bad += err > 1e-4;
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "200 mixed states, %d above 1e-4, worst error %.2e, %.1f s (limit 600 s)", bad, worst,
                secs);
  detail = buf;
  return bad == 0 && secs < 600.0;
}

bool criterion3(std::string& detail) {
  std::vector<Bound> all = g_bounds;
  Rng rng = make_rng(1003, {});
  for (int i = 0; i < 1000; ++i) all.push_back({2, omcp_numerical(random_bell_diagonal(rng), pinned(2, i)).value});
  int bad = 0;
  double low = INFINITY, high = -INFINITY;
  for (const Bound& b : all) {
    low = std::min(low, b.omcp - 1.0 / b.d);
    high = std::max(high, b.omcp - 1.0);
    bad += b.omcp < 1.0 / b.d - 1e-6 || b.omcp > 1.0 + 1e-9;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu states, %d out of bounds, min(omcp - 1/d) %.2e, max(omcp - 1) %.2e", all.size(),
                bad, low, high);
  detail = buf;
  return bad == 0;
}

bool criterion4(std::string& detail) {
  double worst = 0.0;
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 2;
    Rng rng = make_rng(1004, {static_cast<std::uint64_t>(i)});
    const double a = accord_from_omcp(omcp_numerical(random_classical_state(d, rng), pinned(d, i)).value, d);
    worst = std::max(worst, a);
    bad += a > 1e-6;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "100 classical states (d = 2, 3), %d above 1e-6, max accord %.2e", bad, worst);
  detail = buf;
  return bad == 0;
}

bool criterion5(std::string& detail) {
  auto accord_iso = [](double p) { return accord_from_omcp(omcp_isotropic(p, 2).value, 2); };
  const double e0 = std::abs(accord_iso(0.0) - 1.0 / 3.0);
  const double e1 = std::abs(accord_iso(0.25));
  const double e2 = std::abs(accord_iso(1.0) - 1.0);
  double curve = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    const double want = 2.0 * (oracle::omcp_isotropic(p, 2) - 0.5);
    curve = std::max(curve, std::abs(accord_iso(p) - want));
  }

  double lo = 0.5, hi = 1.0;
  while (hi - lo > 1e-13) {
    const double mid = (lo + hi) / 2;
    (chsh_violated(make_isotropic(mid, 2)) ? hi : lo) = mid;
  }
  const double crossing = (lo + hi) / 2;
  const double echsh = std::abs(crossing - (1 + 3 / std::numbers::sqrt2) / 4);

  double edisc = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    DiscordConfig dc;
    dc.seed = static_cast<std::uint64_t>(k);
    edisc = std::max(edisc, std::abs(discord_numerical(make_isotropic(p, 2), dc).value - discord_isotropic(p)));
  }
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "accord errors at p = 0, 1/4, 1: %.1e %.1e %.1e, curve %.1e; CHSH crossing %.12f (error %.1e); "
                "discord error %.1e over 21 points",
                e0, e1, e2, curve, crossing, echsh, edisc);
  detail = buf;
  return e0 <= 1e-9 && e1 <= 1e-9 && e2 <= 1e-9 && curve <= 1e-9 && echsh <= 1e-9 && edisc <= 1e-4;
}

bool criterion6(std::string& detail) {
  int bad_c = 0, bad_j = 0;
  double worst_c = -INFINITY, worst_j = -INFINITY;
  for (int i = 0; i < 10000; ++i) {
    Rng rng = make_rng(1006, {static_cast<std::uint64_t>(i)});
    const DensityMatrix rho = random_bell_diagonal(rng);
    const double a = accord_two_qubit(rho);
    const double c = concurrence(rho);
    const double gap_j = j_function(a) - side_min_discord(rho, i);
    worst_c = std::max(worst_c, c - a);
    worst_j = std::max(worst_j, gap_j);
    bad_c += c > a + 1e-9;
    bad_j += gap_j > 1e-6;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "10000 Bell-diagonal states, %d concurrence violations (max C - A %.2e), %d discord violations "
                "(max J(A) - D %.2e)",
                bad_c, worst_c, bad_j, worst_j);
  detail = buf;
  return bad_c == 0 && bad_j == 0;
}

bool criterion7(std::string& detail) {
  int bad = 0, entangled_above = 0;
  double worst = -INFINITY;
  for (Ensemble e : {Ensemble::HaarComplex, Ensemble::RealGaussian}) {
    for (int i = 0; i < 1000; ++i) {
      Rng rng = make_rng(1007, {static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(i)});
      const DensityMatrix rho = random_two_qubit_mixed(rng, e);
      const double a = accord_two_qubit(rho);
      const double gap = j_function(a) - side_min_discord(rho, i);
      worst = std::max(worst, gap);
      bad += gap > 1e-6;
      entangled_above += concurrence(rho) > a;
    }
  }
  const DensityMatrix fixture = hidden_entanglement_fixture();
  const bool fixture_above = concurrence(fixture) > accord_two_qubit(fixture);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "2000 states, %d violations (max J(A) - D %.2e); %d sampled states with C > A, fixture C > A: %s", bad,
                worst, entangled_above, fixture_above ? "yes" : "no");
  detail = buf;
  return bad == 0 && (entangled_above > 0 || fixture_above);
}

bool criterion8(std::string& detail) {
  const DensityMatrix rho = hidden_entanglement_fixture();
  const double a_svd = accord_two_qubit(rho);
  const double a_num = accord_from_omcp(omcp_numerical(rho, pinned(2, 0)).value, 2);
  const double c = concurrence(rho);
  const double c_oracle = oracle::concurrence(rho.matrix());
  bool found = false;
  int attempts = 0;
  double s_accord = 1.0, s_c = 0.0;
  try {
    Rng rng = make_rng(0, {});
    const ZeroAccordSample s = zero_accord_entangled_search(rng, 10000);
    found = true;
    attempts = s.attempts;
    s_accord = oracle::smallest_singular(oracle::correlation(s.rho.matrix()));
    s_c = oracle::concurrence(s.rho.matrix());
  } catch (const Error&) {
  }
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "fixture accord %.2e (svd) %.2e (numerical), concurrence %.6f (oracle %.6f); search %s after %d "
                "attempts, accord %.1e, concurrence %.4f",
                a_svd, a_num, c, c_oracle, found ? "succeeded" : "failed", attempts, s_accord, s_c);
  detail = buf;
  return a_svd <= 1e-6 && a_num <= 1e-6 && c > 0 && c_oracle > 0 && found && s_accord <= 1e-9 && s_c > 0.01;
}

bool criterion9(std::string& detail) {
  double worst_h = 0.0;
  for (int d : {2, 3, 5}) {
    Rng rng = make_rng(1009, {static_cast<std::uint64_t>(d)});
    for (int i = 0; i < 100; ++i) {
      const CMatrix a = complex_gaussian(d, d, rng), b = complex_gaussian(d, d, rng);
      const auto [lhs, rhs] = hadamard_trace_identity(a, b);
      worst_h = std::max({worst_h, std::abs(lhs - rhs), std::abs(lhs - a.trace() * b.trace())});
    }
  }
  double worst_f = 0.0;
  bool singlet_exact = true;
  Rng rng = make_rng(1009, {0});
  for (int i = 0; i < 50; ++i) {
    const int d = 2 + i % 4;
    const PureState psi = random_pure_state(d, rng);
    const SchmidtForm s = schmidt_decompose(psi);
    const UnitaryMatrix ua = haar_random_unitary(d, rng), ub = haar_random_unitary(d, rng);
    const double full = oracle::mcp(psi.projector(), ua.matrix(), ub.matrix());
    const double general = mcp(DensityMatrix::from_pure(psi), ua, ub);
    const double fast = mcp_pure_fast(s.coeffs, ua * s.left, ub * s.right);
    const double trace = mcp_pure_trace_form(s.coeffs, ua * s.left, ub * s.right);
    worst_f = std::max({worst_f, std::abs(general - full), std::abs(fast - full), std::abs(trace - full)});
    singlet_exact = singlet_exact && singlet_fraction_pure(s) == omcp_pure(s).value;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "Hadamard trace identity worst %.1e over 300 pairs; mcp forms worst %.1e over 50 triples; singlet "
                "fraction equals omcp_pure: %s",
                worst_h, worst_f, singlet_exact ? "yes" : "no");
  detail = buf;
  return worst_h <= 1e-12 && worst_f <= 1e-12 && singlet_exact;
}

bool criterion10(std::string& detail) {
  GameConfig cfg;
  cfg.n_a = 256;
  cfg.n_b = 256;
  cfg.shots = 0;
  const double bell = simulate_game(DensityMatrix::from_pure(make_max_entangled(2)), cfg).estimate;
  const double mixed = simulate_game(make_isotropic(0.25, 2), cfg).estimate;
  char buf[160];
  std::snprintf(buf, sizeof buf, "Phi+ estimate %.6f, I/4 estimate %.15f", bell, mixed);
  detail = buf;
  return std::abs(bell - 1.0) <= 0.05 && std::abs(mixed - 0.5) <= 1e-12;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"pure-state omcp depends only on Schmidt coefficients", criterion1},
      {"two-qubit omcp equals (1 + s_min)/2", criterion2},
      {"omcp lies in [1/d, 1]", criterion3},
      {"classical states have zero accord", criterion4},
      {"isotropic curve, CHSH threshold and discord", criterion5},
      {"Bell-diagonal concurrence and discord bounds", criterion6},
      {"general two-qubit discord bound", criterion7},
      {"entangled states with zero accord", criterion8},
      {"mcp identities", criterion9},
      {"game converges to omcp", criterion10},
  };
  int failed = 0, index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    std::string detail;
    bool ok = false;
    const auto t0 = Clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::printf("%s %2d %s: %s [%.1f s]\n", ok ? "PASS" : "FAIL", index, c.name, detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
