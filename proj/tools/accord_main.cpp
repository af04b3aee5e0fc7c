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

// accord: command-line front end.
//
//   accord compute --state rho.json
//   accord scan-isotropic --dim 2 --steps 101 --out iso.csv
//   accord scatter --family bell_diagonal --count 10000 --seed 1 --out bd.csv
//   accord game --state rho.json --na 64 --nb 64 --shots 2000
//   accord verify --suite all
//   accord state --family isotropic --p 0.9 --out rho.json

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>

#include "accord/classify.hpp"
#include "accord/exact.hpp"
#include "accord/game.hpp"
#include "accord/measures.hpp"
#include "accord/optimizer.hpp"
#include "accord/sampling.hpp"
#include "accord/state_io.hpp"
#include "accord/verify.hpp"

namespace {

using namespace accord;
using json = nlohmann::ordered_json;

constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitVerifyFailed = 4;

struct Options {
  std::string state;
  std::string family = "bell_diagonal";
  std::string side = "A";
  std::string suite = "all";
  std::string out;
  int count = 1000;
  int steps = 101;
  int dim = 2;
  int shots = 1000;
  int n_a = 16;
  int n_b = 16;
  std::uint64_t seed = 0;
  double weight = 1.0;
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::OutOfRange, "cannot write " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json measured(double value, const char* method) { return {{"value", value}, {"method", method}}; }

double discord_for(const DensityMatrix& rho, const std::string& side, std::uint64_t seed) {
  DiscordConfig dc;
  dc.seed = seed;
  if (side == "B") dc.measured_side = Subsystem::B;
  const double first = discord_numerical(rho, dc).value;
  if (side != "min") return first;
  dc.measured_side = Subsystem::B;
  return std::min(first, discord_numerical(rho, dc).value);
}

int cmd_compute(const Options& o) {
  const DensityMatrix rho = read_state_file(o.state);
  const int d = rho.dim_local();
  const Classification cls = classify_state(rho);
  OptimizerConfig cfg;
  cfg.seed = o.seed;
  if (cls.family == Family::General)
    std::cerr << "warning: no closed form for this state; numerical minimax is a multi-start heuristic\n";
  const MeasureResult omcp = omcp_auto(rho, cfg);

  json report;
  report["d"] = d;
  report["family"] = to_string(cls.family);
  report["omcp"] = measured(omcp.value, to_string(omcp.method));
  report["accord"] = measured(accord_from_omcp(omcp.value, d), to_string(omcp.method));
  if (cls.schmidt && cls.family == Family::Pure) {
    report["singlet_fraction"] = measured(singlet_fraction_pure(*cls.schmidt), to_string(Method::ClosedForm));
  } else {
    report["singlet_fraction"] = measured(singlet_fraction_numerical(rho, cfg).value, to_string(Method::Numerical));
  }
  report["mutual_information"] = measured(mutual_information(rho), to_string(Method::ClosedForm));
  if (d == 2) {
    report["concurrence"] = measured(concurrence(rho), to_string(Method::ClosedForm));
    json disc = measured(discord_for(rho, o.side, o.seed), to_string(Method::Numerical));
    disc["measured_side"] = o.side;
    report["discord"] = disc;
    report["chsh"] = measured(chsh_parameter(rho), to_string(Method::ClosedForm));
  } else {
    report["concurrence"] = nullptr;
    report["discord"] = nullptr;
    report["chsh"] = nullptr;
  }
  Sink sink(o.out);
  sink.os() << report.dump(2) << '\n';
  return 0;
}

int cmd_scan_isotropic(const Options& o) {
  if (o.steps < 2) throw Error(ErrorCode::OutOfRange, "--steps must be at least 2");
  Sink sink(o.out);
  std::ostream& os = sink.os();
  os << "p,accord,concurrence,singlet_fraction,discord,chsh_violated\n";
  OptimizerConfig cfg;
  cfg.seed = o.seed;
  for (int k = 0; k < o.steps; ++k) {
    const double p = static_cast<double>(k) / (o.steps - 1);
    const DensityMatrix rho = make_isotropic(p, o.dim);
    const double a = accord_from_omcp(omcp_isotropic(p, o.dim).value, o.dim);
    const double sf = singlet_fraction_numerical(rho, cfg).value;
    if (o.dim == 2) {
      os << num(p) << ',' << num(a) << ',' << num(concurrence(rho)) << ',' << num(sf) << ','
         << num(discord_isotropic(p)) << ',' << (chsh_violated(rho) ? 1 : 0) << '\n';
    } else {
      os << num(p) << ',' << num(a) << ",," << num(sf) << ",,\n";
    }
  }
  return 0;
}

int cmd_scatter(const Options& o) {
  std::uint64_t tag;
  if (o.family == "bell_diagonal") {
    tag = 0;
  } else if (o.family == "general_i") {
    tag = 1;
  } else if (o.family == "general_ii") {
    tag = 2;
  } else {
    throw Error(ErrorCode::OutOfRange, "--family must be bell_diagonal, general_i or general_ii");
  }
  if (o.count < 1) throw Error(ErrorCode::OutOfRange, "--count must be positive");
  Sink sink(o.out);
  std::ostream& os = sink.os();
  os << "accord,concurrence,discord,j_of_accord,accord_minus_concurrence\n";
  for (int i = 0; i < o.count; ++i) {
    Rng rng = make_rng(o.seed, {tag, static_cast<std::uint64_t>(i)});
    const DensityMatrix rho = tag == 0   ? random_bell_diagonal(rng)
                              : tag == 1 ? random_two_qubit_mixed(rng, Ensemble::HaarComplex)
                                         : random_two_qubit_mixed(rng, Ensemble::RealGaussian);
    const double a = accord_two_qubit(rho);
    const double c = concurrence(rho);
    const double disc = discord_for(rho, o.side, derive_seed(o.seed, {tag, static_cast<std::uint64_t>(i), 1}));
    os << num(a) << ',' << num(c) << ',' << num(disc) << ',' << num(j_function(a)) << ',' << num(a - c) << '\n';
  }
  return 0;
}

int cmd_game(const Options& o) {
  const DensityMatrix rho = read_state_file(o.state);
  GameConfig cfg;
  cfg.n_a = o.n_a;
  cfg.n_b = o.n_b;
  cfg.shots = o.shots;
  cfg.seed = o.seed;
  cfg.record_counts = true;
  const GameResult r = simulate_game(rho, cfg);
  json report;
  report["estimate"] = r.estimate;
  report["n_a"] = cfg.n_a;
  report["n_b"] = cfg.n_b;
  report["shots"] = cfg.shots;
  report["seed"] = cfg.seed;
  report["per_b_maxima"] = r.per_b_maxima;
  if (r.empirical_distribution) report["coincidence_counts"] = *r.empirical_distribution;
  Sink sink(o.out);
  sink.os() << report.dump(2) << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.count = o.count;
  const std::vector<CheckResult> results = run_verify(o.suite, vo);
  Sink sink(o.out);
  bool ok = true;
  for (const CheckResult& r : results) {
    sink.os() << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_state(const Options& o) {
  const std::string& f = o.family;
  DensityMatrix rho = [&] {
    if (f == "max_entangled") return DensityMatrix::from_pure(make_max_entangled(o.dim));
    if (f == "isotropic") return make_isotropic(o.weight, o.dim);
    if (f == "maximally_mixed") return make_isotropic(1.0 / (o.dim * o.dim), o.dim);
    if (f == "zero_accord_fixture") return hidden_entanglement_fixture();
    if (f == "random_pure") {
      Rng rng = make_rng(o.seed, {0x57a7e});
      return DensityMatrix::from_pure(random_pure_state(o.dim, rng));
    }
    throw Error(ErrorCode::OutOfRange,
                "--family must be max_entangled, isotropic, maximally_mixed, zero_accord_fixture or random_pure");
  }();
  Sink sink(o.out);
  write_state(sink.os(), rho);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement-coincidence accord of bipartite quantum states"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "All measures of one state, as JSON");
  compute->add_option("--state", o.state, "State file")->required()->check(CLI::ExistingFile);
  compute->add_option("--measured-side", o.side, "Discord measurement side")->check(CLI::IsMember({"A", "B", "min"}));
  compute->add_option("--seed", o.seed, "Master seed");
  compute->add_option("--out", o.out, "Output file");

  auto* scan = app.add_subcommand("scan-isotropic", "Measures along the isotropic family, as CSV");
  scan->add_option("--dim", o.dim, "Local dimension")->check(CLI::Range(2, 16));
  scan->add_option("--steps", o.steps, "Grid points in p");
  scan->add_option("--seed", o.seed, "Master seed");
  scan->add_option("--out", o.out, "Output file");

  auto* scatter = app.add_subcommand("scatter", "Measures of random two-qubit states, as CSV");
  scatter->add_option("--family", o.family, "bell_diagonal, general_i (Haar) or general_ii (real Gaussian)");
  scatter->add_option("--count", o.count, "Number of states");
  scatter->add_option("--seed", o.seed, "Master seed");
  scatter->add_option("--measured-side", o.side, "Discord measurement side")->check(CLI::IsMember({"A", "B", "min"}));
  scatter->add_option("--out", o.out, "Output file");

  auto* game = app.add_subcommand("game", "Monte Carlo coincidence game, as JSON");
  game->add_option("--state", o.state, "State file")->required()->check(CLI::ExistingFile);
  game->add_option("--na", o.n_a, "Alice unitaries per Bob unitary");
  game->add_option("--nb", o.n_b, "Bob unitaries");
  game->add_option("--shots", o.shots, "Measurements per pair, 0 for exact probabilities");
  game->add_option("--seed", o.seed, "Master seed");
  game->add_option("--out", o.out, "Output file");

  auto* verify = app.add_subcommand("verify", "Self-check suites");
  verify->add_option("--suite", o.suite, "identities, closed-forms, bounds, bell-diagonal, general, game or all");
  verify->add_option("--count", o.count, "States per sampled check")->default_val(100);
  verify->add_option("--seed", o.seed, "Master seed");
  verify->add_option("--out", o.out, "Output file");

  auto* state = app.add_subcommand("state", "Write a reference state file");
  state->add_option("--family", o.family,
                    "max_entangled, isotropic, maximally_mixed, zero_accord_fixture or random_pure")
      ->required();
  state->add_option("--dim", o.dim, "Local dimension")->check(CLI::Range(2, 16));
  state->add_option("--p", o.weight, "Isotropic weight")->check(CLI::Range(0.0, 1.0));
  state->add_option("--seed", o.seed, "Master seed");
  state->add_option("--out", o.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*compute) return cmd_compute(o);
    if (*scan) return cmd_scan_isotropic(o);
    if (*scatter) return cmd_scatter(o);
    if (*game) return cmd_game(o);
    if (*verify) return cmd_verify(o);
    if (*state) return cmd_state(o);
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << " (best value " << num(e.best_so_far().value) << ")\n";
    return kExitNoConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
