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

#include <immintrin.h>

#include "accord/kernels.hpp"

// Complex values are interleaved (re, im); one __m256d holds two of them.

namespace accord::kernels::avx2 {

namespace {

// (a_re + i a_im)(x_re + i x_im) for two interleaved complex pairs.
inline __m256d cmul(__m256d a, __m256d x) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d x_sw = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(a_re, x, _mm256_mul_pd(a_im, x_sw));
}

inline Complex hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return {out[0], out[1]};
}

}  // namespace

Complex sesquilinear(const Complex* r, std::size_t ld, const Complex* v, std::size_t n) {
  const auto* vd = reinterpret_cast<const double*>(v);
  const std::size_t pairs = n / 2;
  const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto* row = reinterpret_cast<const double*>(r + k * ld);
    __m256d t = _mm256_setzero_pd();
    for (std::size_t p = 0; p < pairs; ++p) {
      const __m256d rv = _mm256_loadu_pd(row + 4 * p);
      const __m256d cv = _mm256_xor_pd(_mm256_loadu_pd(vd + 4 * p), conj_mask);
      t = _mm256_add_pd(t, cmul(rv, cv));
    }
    Complex tk = hsum(t);
    if (n % 2) tk += r[k * ld + n - 1] * std::conj(v[n - 1]);
    acc += v[k] * tk;
  }
  return acc;
}

double hadamard_coincidence(const Complex* a, const Complex* b, const double* c, std::size_t d) {
  const std::size_t pairs = d / 2;
  double acc = 0.0;
  for (std::size_t n = 0; n < d; ++n) {
    const auto* ar = reinterpret_cast<const double*>(a + n * d);
    const auto* br = reinterpret_cast<const double*>(b + n * d);
    __m256d s = _mm256_setzero_pd();
    for (std::size_t p = 0; p < pairs; ++p) {
      const __m256d w = _mm256_set_pd(c[2 * p + 1], c[2 * p + 1], c[2 * p], c[2 * p]);
      const __m256d prod = cmul(_mm256_loadu_pd(ar + 4 * p), _mm256_loadu_pd(br + 4 * p));
      s = _mm256_fmadd_pd(prod, w, s);
    }
    Complex sn = hsum(s);
    if (d % 2) sn += a[n * d + d - 1] * b[n * d + d - 1] * c[d - 1];
    acc += std::norm(sn);
  }
  return acc;
}

}  // namespace accord::kernels::avx2
