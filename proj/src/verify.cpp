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

#include "accord/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "accord/exact.hpp"
#include "accord/game.hpp"
#include "accord/measures.hpp"
#include "accord/optimizer.hpp"
#include "accord/sampling.hpp"

namespace accord {

namespace {

// Accumulates the largest violation of "value <= 0" over many samples.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void add(double excess) {
    ++samples_;
    worst_ = std::max(worst_, excess);
    if (excess > 0.0) ++violations_;
  }

  CheckResult result() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d/%d violations, worst excess %.3g", violations_, samples_, worst_);
    return {name_, violations_ == 0, buf};
  }

 private:
  std::string name_;
  int samples_ = 0;
  int violations_ = 0;
  double worst_ = -INFINITY;
};

OptimizerConfig light_config(std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.inner_restarts = 8;
  cfg.outer_restarts = 4;
  cfg.seed = seed;
  return cfg;
}

double side_min_discord(const DensityMatrix& rho, std::uint64_t seed) {
  DiscordConfig dc;
  dc.seed = seed;
  const double da = discord_numerical(rho, dc).value;
  dc.measured_side = Subsystem::B;
  return std::min(da, discord_numerical(rho, dc).value);
}

std::vector<CheckResult> identities(const VerifyOptions& o) {
  Tally hadamard("hadamard trace identity"), forms("mcp formulas agree"), singlet("singlet fraction equals omcp_pure");
  for (int d : {2, 3, 5}) {
    Rng rng = make_rng(o.seed, {1, static_cast<std::uint64_t>(d)});
    for (int i = 0; i < o.count; ++i) {
      const auto [lhs, rhs] = hadamard_trace_identity(complex_gaussian(d, d, rng), complex_gaussian(d, d, rng));
      hadamard.add(std::abs(lhs - rhs) - 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
  Rng rng = make_rng(o.seed, {2});
  for (int i = 0; i < o.count; ++i) {
    const int d = 2 + i % 3;
    const SchmidtForm s = schmidt_decompose(random_pure_state(d, rng));
    const UnitaryMatrix ua = haar_random_unitary(d, rng);
    const UnitaryMatrix ub = haar_random_unitary(d, rng);
    const double general = mcp(DensityMatrix::from_pure(s.recompose()), ua, ub);
    const double fast = mcp_pure_fast(s.coeffs, ua * s.left, ub * s.right);
    const double trace = mcp_pure_trace_form(s.coeffs, ua * s.left, ub * s.right);
    forms.add(std::max(std::abs(general - fast), std::abs(fast - trace)) - 1e-12);
    singlet.add(singlet_fraction_pure(s) == omcp_pure(s).value ? -1.0 : 1.0);
  }
  return {hadamard.result(), forms.result(), singlet.result()};
}

std::vector<CheckResult> closed_forms(const VerifyOptions& o) {
  Tally pure("numerical omcp matches pure-state formula"), qubit("numerical omcp matches two-qubit formula");
  const int n = std::max(1, o.count / 10);
  for (int d : {2, 3}) {
    Rng rng = make_rng(o.seed, {3, static_cast<std::uint64_t>(d)});
    for (int i = 0; i < n; ++i) {
      const PureState psi = random_pure_state(d, rng);
      const double exact = omcp_pure(schmidt_decompose(psi)).value;
      const double num = omcp_numerical(DensityMatrix::from_pure(psi), light_config(o.seed + i)).value;
      pure.add(std::abs(num - exact) - 1e-4);
    }
  }
  Rng rng = make_rng(o.seed, {4});
  for (int i = 0; i < n; ++i) {
    const DensityMatrix rho = random_two_qubit_mixed(rng, Ensemble::HaarComplex);
    qubit.add(std::abs(omcp_numerical(rho, light_config(o.seed + i)).value - omcp_two_qubit(rho).value) - 1e-4);
  }
  Tally iso("isotropic reference points");
  iso.add(std::abs(accord_from_omcp(omcp_isotropic(0.0, 2).value, 2) - 1.0 / 3.0) - 1e-9);
  iso.add(std::abs(accord_from_omcp(omcp_isotropic(0.25, 2).value, 2)) - 1e-9);
  iso.add(std::abs(accord_from_omcp(omcp_isotropic(1.0, 2).value, 2) - 1.0) - 1e-9);
  return {pure.result(), qubit.result(), iso.result()};
}

std::vector<CheckResult> bounds(const VerifyOptions& o) {
  Tally range("omcp within [1/d, 1]"), classical("classical states have zero accord");
  Rng rng = make_rng(o.seed, {5});
  for (int i = 0; i < o.count; ++i) {
    const DensityMatrix rho = i % 2 ? random_bell_diagonal(rng) : random_two_qubit_mixed(rng, Ensemble::HaarComplex);
    const double v = omcp_two_qubit(rho).value;
    range.add(std::max(0.5 - 1e-6 - v, v - 1.0 - 1e-9));
  }
  for (int i = 0; i < std::max(1, o.count / 10); ++i) {
    const DensityMatrix rho = random_classical_state(2, rng);
    classical.add(accord_two_qubit(rho) - 1e-6);
  }
  Rng rng3 = make_rng(o.seed, {6});
  const int n3 = std::max(1, o.count / 20);
  for (int i = 0; i < n3; ++i) {
    const DensityMatrix rho = random_classical_state(3, rng3);
    const double v = omcp_numerical(rho, light_config(o.seed + i)).value;
    classical.add(accord_from_omcp(v, 3) - 1e-6);
  }
  return {range.result(), classical.result()};
}

std::vector<CheckResult> bell_diagonal(const VerifyOptions& o) {
  Tally conc("concurrence <= accord"), disc("J(accord) <= discord");
  Rng rng = make_rng(o.seed, {7});
  for (int i = 0; i < o.count; ++i) {
    const DensityMatrix rho = random_bell_diagonal(rng);
    const double a = accord_two_qubit(rho);
    conc.add(concurrence(rho) - a - 1e-9);
    disc.add(j_function(a) - side_min_discord(rho, o.seed + i) - 1e-6);
  }
  return {conc.result(), disc.result()};
}

std::vector<CheckResult> general(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (Ensemble e : {Ensemble::HaarComplex, Ensemble::RealGaussian}) {
    Tally disc(std::string("J(accord) <= discord, ") + to_string(e) + " ensemble");
    Rng rng = make_rng(o.seed, {8, static_cast<std::uint64_t>(e)});
    for (int i = 0; i < o.count; ++i) {
      const DensityMatrix rho = random_two_qubit_mixed(rng, e);
      disc.add(j_function(accord_two_qubit(rho)) - side_min_discord(rho, o.seed + i) - 1e-6);
    }
    out.push_back(disc.result());
  }
  Rng rng = make_rng(o.seed, {9});
  CheckResult zero{"entangled zero-accord state found", false, ""};
  try {
    const ZeroAccordSample s = zero_accord_entangled_search(rng, 10000);
    const double a = accord_two_qubit(s.rho);
    zero.passed = a <= 1e-9 && s.concurrence > 0.01;
    char buf[128];
    std::snprintf(buf, sizeof buf, "accord %.3g, concurrence %.4g after %d attempts", a, s.concurrence, s.attempts);
    zero.detail = buf;
  } catch (const Error& e) {
    zero.detail = e.what();
  }
  out.push_back(zero);
  return out;
}

std::vector<CheckResult> game(const VerifyOptions& o) {
  GameConfig cfg;
  cfg.n_a = cfg.n_b = 256;
  cfg.shots = 0;
  cfg.seed = o.seed;
  const double bell = simulate_game(DensityMatrix::from_pure(make_max_entangled(2)), cfg).estimate;
  const double mixed = simulate_game(validate_density(CMatrix::Identity(4, 4) / 4.0, 2), cfg).estimate;
  char buf[96];
  std::snprintf(buf, sizeof buf, "estimate %.6f", bell);
  CheckResult a{"game estimate for a Bell state near 1", std::abs(bell - 1.0) <= 0.05, buf};
  std::snprintf(buf, sizeof buf, "estimate %.15f", mixed);
  CheckResult b{"game estimate for the maximally mixed state is 1/2", std::abs(mixed - 0.5) <= 1e-12, buf};
  return {a, b};
}

using Suite = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> r = {
      {"identities", identities}, {"closed-forms", closed_forms}, {"bounds", bounds},
      {"bell-diagonal", bell_diagonal}, {"general", general}, {"game", game},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"identities", "closed-forms", "bounds",
                                                 "bell-diagonal", "general", "game"};
  return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opts) {
  if (opts.count < 1) throw Error(ErrorCode::OutOfRange, "count must be positive");
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const std::string& name : verify_suites()) {
      auto part = registry().at(name)(opts);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  const auto it = registry().find(suite);
  if (it == registry().end()) throw Error(ErrorCode::OutOfRange, "unknown verify suite: " + suite);
  return it->second(opts);
}

}  // namespace accord
