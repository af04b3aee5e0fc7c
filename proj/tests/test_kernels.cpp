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

#include <vector>

#include "accord/kernels.hpp"
#include "accord/random.hpp"

namespace accord {
namespace {

using kernels::Isa;

std::vector<Complex> random_buffer(std::size_t n, Rng& rng) {
  const CMatrix g = complex_gaussian(static_cast<int>(n), 1, rng);
  return std::vector<Complex>(g.data(), g.data() + n);
}

Complex sesquilinear_oracle(const std::vector<Complex>& r, std::size_t ld, const std::vector<Complex>& v, std::size_t n) {
  Complex s;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) s += v[k] * r[k * ld + l] * std::conj(v[l]);
  return s;
}

TEST(Kernels, ScalarSesquilinearMatchesOracle) {
  Rng rng = make_rng(17, {1});
  for (std::size_t n = 1; n <= 17; ++n) {
    const std::size_t ld = n + 3;
    const auto r = random_buffer(n * ld, rng);
    const auto v = random_buffer(n, rng);
    EXPECT_LT(std::abs(kernels::scalar::sesquilinear(r.data(), ld, v.data(), n) - sesquilinear_oracle(r, ld, v, n)),
              1e-12 * static_cast<double>(n * n));
  }
}

TEST(Kernels, ScalarHadamardCoincidenceMatchesOracle) {
  Rng rng = make_rng(17, {2});
  for (std::size_t d = 1; d <= 9; ++d) {
    const auto a = random_buffer(d * d, rng), b = random_buffer(d * d, rng);
    std::vector<double> c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = 0.1 * static_cast<double>(k + 1);
    double expected = 0.0;
    for (std::size_t n = 0; n < d; ++n) {
      Complex s;
      for (std::size_t k = 0; k < d; ++k) s += a[n * d + k] * b[n * d + k] * c[k];
      expected += std::norm(s);
    }
    EXPECT_NEAR(kernels::scalar::hadamard_coincidence(a.data(), b.data(), c.data(), d), expected, 1e-12 * (1 + expected));
  }
}

#if defined(ACCORD_HAVE_AVX2)

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!kernels::isa_available(Isa::Avx2)) GTEST_SKIP() << "CPU lacks AVX2+FMA";
  }
};

TEST_F(Avx2Equivalence, Sesquilinear) {
  Rng rng = make_rng(17, {3});
  for (std::size_t n = 1; n <= 33; ++n) {
    for (std::size_t pad : {0u, 1u, 4u}) {
      const std::size_t ld = n + pad;
      const auto r = random_buffer(n * ld, rng);
      const auto v = random_buffer(n, rng);
      const Complex s = kernels::scalar::sesquilinear(r.data(), ld, v.data(), n);
      const Complex a = kernels::avx2::sesquilinear(r.data(), ld, v.data(), n);
      EXPECT_LT(std::abs(s - a), 1e-12 * (1.0 + std::abs(s))) << "n=" << n << " ld=" << ld;
    }
  }
}

TEST_F(Avx2Equivalence, HadamardCoincidence) {
  Rng rng = make_rng(17, {4});
  for (std::size_t d = 1; d <= 17; ++d) {
    const auto a = random_buffer(d * d, rng), b = random_buffer(d * d, rng);
    std::vector<double> c(d);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& x : c) x = u(rng);
    const double s = kernels::scalar::hadamard_coincidence(a.data(), b.data(), c.data(), d);
    const double v = kernels::avx2::hadamard_coincidence(a.data(), b.data(), c.data(), d);
    EXPECT_NEAR(s, v, 1e-12 * (1.0 + s)) << "d=" << d;
  }
}

TEST_F(Avx2Equivalence, UnalignedInputs) {
  Rng rng = make_rng(17, {5});
  const std::size_t n = 7;
  // Complex<double> is 16-byte aligned; offsetting by one element breaks
  // 32-byte alignment.
  auto r = random_buffer(n * n + 1, rng);
  auto v = random_buffer(n + 1, rng);
  const Complex s = kernels::scalar::sesquilinear(r.data() + 1, n, v.data() + 1, n);
  const Complex a = kernels::avx2::sesquilinear(r.data() + 1, n, v.data() + 1, n);
  EXPECT_LT(std::abs(s - a), 1e-12 * (1.0 + std::abs(s)));
}

#endif

TEST(Kernels, DispatchCanBePinned) {
  const Isa before = kernels::active_isa();
  kernels::force_isa(Isa::Scalar);
  EXPECT_EQ(kernels::active_isa(), Isa::Scalar);
  EXPECT_TRUE(kernels::isa_available(Isa::Scalar));
  if (!kernels::isa_available(Isa::Avx2)) {
    EXPECT_THROW(kernels::force_isa(Isa::Avx2), std::runtime_error);
  }
  kernels::force_isa(before);
  EXPECT_STREQ(kernels::to_string(Isa::Scalar), "scalar");
}

}  // namespace
}  // namespace accord
