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

#ifndef ACCORD_KERNELS_HPP_
#define ACCORD_KERNELS_HPP_

#include <complex>
#include <cstddef>

// Inner-loop arithmetic shared by the optimizer, the game simulator and the
// closed-form checks. Each kernel has a scalar reference and, on x86-64, an
// AVX2+FMA variant picked at first use from CPUID. ACCORD_ISA=scalar in the
// environment pins the reference path.

namespace accord::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
/// Overrides dispatch; throws if the ISA is unavailable on this machine.
void force_isa(Isa isa);

/// sum_{k,l} v_k R_{k,l} conj(v_l) for the n x n block of a row-major matrix
/// with leading dimension ld.
Complex sesquilinear(const Complex* r, std::size_t ld, const Complex* v, std::size_t n);

/// sum_n | sum_k a_{n,k} b_{n,k} c_k |^2 for row-major d x d matrices a, b.
double hadamard_coincidence(const Complex* a, const Complex* b, const double* c, std::size_t d);

namespace scalar {
Complex sesquilinear(const Complex* r, std::size_t ld, const Complex* v, std::size_t n);
double hadamard_coincidence(const Complex* a, const Complex* b, const double* c, std::size_t d);
}  // namespace scalar

#if defined(ACCORD_HAVE_AVX2)
namespace avx2 {
Complex sesquilinear(const Complex* r, std::size_t ld, const Complex* v, std::size_t n);
double hadamard_coincidence(const Complex* a, const Complex* b, const double* c, std::size_t d);
}  // namespace avx2
#endif

}  // namespace accord::kernels

#endif  // ACCORD_KERNELS_HPP_
