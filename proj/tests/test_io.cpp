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

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

#include "accord/classify.hpp"
#include "accord/exact.hpp"
#include "accord/sampling.hpp"
#include "accord/state_io.hpp"
#include "accord/verify.hpp"

namespace accord {
namespace {

ErrorCode code_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_state(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::NotFound;
}

TEST(StateIo, RoundTripIsExact) {
  Rng rng = make_rng(71, {1});
  for (int d : {2, 3}) {
    const DensityMatrix rho = random_classical_state(d, rng);
    std::stringstream s;
    write_state(s, rho);
    const DensityMatrix back = read_state(s);
    EXPECT_EQ(back.dim_local(), d);
    EXPECT_EQ(back.matrix(), rho.matrix());
  }
}

TEST(StateIo, FileRoundTrip) {
  const std::string path = ::testing::TempDir() + "accord_state_io.json";
  const DensityMatrix rho = hidden_entanglement_fixture();
  write_state_file(path, rho);
  EXPECT_EQ(read_state_file(path).matrix(), rho.matrix());
  std::remove(path.c_str());
  EXPECT_THROW(read_state_file(path), Error);
}

TEST(StateIo, Rejects) {
  EXPECT_EQ(code_of("not json"), ErrorCode::BadStateFile);
  EXPECT_EQ(code_of("{\"matrix\": []}"), ErrorCode::BadStateFile);
  EXPECT_EQ(code_of("{\"d\": 2, \"matrix\": [[[1,0]]]}"), ErrorCode::BadStateFile);
  EXPECT_EQ(code_of("{\"d\": 1, \"matrix\": [[[1,0]]]}"), ErrorCode::BadDimension);
  std::string bad = "{\"d\": 2, \"matrix\": [";
  for (int i = 0; i < 4; ++i) {
    bad += i ? "," : "";
    bad += "[";
    for (int j = 0; j < 4; ++j) bad += std::string(j ? "," : "") + (i == j ? "[0.5,0]" : "[0,0]");
    bad += "]";
  }
  bad += "]}";
  EXPECT_EQ(code_of(bad), ErrorCode::NotUnitTrace);
  std::string shape = "{\"d\": 2, \"matrix\": [[[1,0,0]]]}";
  EXPECT_EQ(code_of(shape), ErrorCode::BadStateFile);
}

TEST(Classify, Families) {
  EXPECT_EQ(classify_state(DensityMatrix::from_pure(make_max_entangled(3))).family, Family::Pure);
  const Classification iso = classify_state(make_isotropic(0.4, 3));
  EXPECT_EQ(iso.family, Family::Isotropic);
  EXPECT_NEAR(iso.weight, 0.4, 1e-12);
  EXPECT_EQ(classify_state(make_isotropic(0.4, 2)).family, Family::Isotropic);

  Rng rng = make_rng(71, {2});
  const PureState psi = random_pure_state(3, rng);
  const Classification ppn = classify_state(make_pure_plus_noise(psi, 0.3));
  EXPECT_EQ(ppn.family, Family::PurePlusNoise);
  EXPECT_NEAR(ppn.weight, 0.3, 1e-10);
  ASSERT_TRUE(ppn.schmidt);
  EXPECT_NEAR((ppn.schmidt->coeffs - schmidt_decompose(psi).coeffs).norm(), 0.0, 1e-8);

  EXPECT_EQ(classify_state(random_two_qubit_mixed(rng, Ensemble::HaarComplex)).family, Family::TwoQubit);
  EXPECT_EQ(classify_state(random_classical_state(3, rng)).family, Family::General);
  EXPECT_STREQ(to_string(Family::PurePlusNoise), "pure_plus_noise");
}

TEST(Classify, AutoUsesClosedForms) {
  const MeasureResult r = omcp_auto(make_isotropic(0.05, 4));
  EXPECT_EQ(r.method, Method::ClosedForm);
  EXPECT_EQ(r.value, omcp_isotropic(0.05, 4).value);
  EXPECT_EQ(omcp_auto(hidden_entanglement_fixture()).method, Method::ClosedForm);
}

TEST(Verify, QuickSuitesPass) {
  VerifyOptions opts;
  opts.count = 5;
  for (const std::string suite : {"identities", "closed-forms", "bell-diagonal"}) {
    for (const CheckResult& c : run_verify(suite, opts)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
  EXPECT_THROW(run_verify("nope", opts), Error);
  EXPECT_EQ(verify_suites().size(), 6u);
}

}  // namespace
}  // namespace accord
