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

#include "accord/kernels.hpp"

#include <complex>

namespace accord::kernels::scalar {

Complex sesquilinear(const Complex* r, std::size_t ld, const Complex* v, std::size_t n) {
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex* row = r + k * ld;
    Complex t(0.0, 0.0);
    for (std::size_t l = 0; l < n; ++l) t += row[l] * std::conj(v[l]);
    acc += v[k] * t;
  }
  return acc;
}

double hadamard_coincidence(const Complex* a, const Complex* b, const double* c, std::size_t d) {
  double acc = 0.0;
  for (std::size_t n = 0; n < d; ++n) {
    Complex s(0.0, 0.0);
    for (std::size_t k = 0; k < d; ++k) s += a[n * d + k] * b[n * d + k] * c[k];
    acc += std::norm(s);
  }
  return acc;
}

}  // namespace accord::kernels::scalar
