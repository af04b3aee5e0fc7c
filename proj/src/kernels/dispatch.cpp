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

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "accord/kernels.hpp"

namespace accord::kernels {

namespace {

struct Table {
  Complex (*sesquilinear)(const Complex*, std::size_t, const Complex*, std::size_t);
  double (*hadamard_coincidence)(const Complex*, const Complex*, const double*, std::size_t);
};

constexpr Table kScalar{&scalar::sesquilinear, &scalar::hadamard_coincidence};
#if defined(ACCORD_HAVE_AVX2)
constexpr Table kAvx2{&avx2::sesquilinear, &avx2::hadamard_coincidence};
#endif

const Table& table_for(Isa isa) {
#if defined(ACCORD_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

Isa detect() {
  if (const char* env = std::getenv("ACCORD_ISA"); env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(ACCORD_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error(std::string("ISA not available: ") + to_string(isa));
  current().store(isa, std::memory_order_relaxed);
}

Complex sesquilinear(const Complex* r, std::size_t ld, const Complex* v, std::size_t n) {
  return table_for(active_isa()).sesquilinear(r, ld, v, n);
}

double hadamard_coincidence(const Complex* a, const Complex* b, const double* c, std::size_t d) {
  return table_for(active_isa()).hadamard_coincidence(a, b, c, d);
}

}  // namespace accord::kernels
