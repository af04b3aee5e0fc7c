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

#ifndef ACCORD_RANDOM_HPP_
#define ACCORD_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

#include "accord/qstate.hpp"

namespace accord {

using Rng = std::mt19937_64;

/// Mixes a master seed with a path of indices (restart number, pair index,
/// ...) into an independent stream seed. Results never depend on the order
/// in which streams are consumed.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);
Rng make_rng(std::uint64_t master, std::initializer_list<std::uint64_t> path);

/// Entries (N(0,1) + i N(0,1)) / sqrt(2).
CMatrix complex_gaussian(int rows, int cols, Rng& rng);

/// Haar-distributed element of U(d): QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
UnitaryMatrix haar_random_unitary(int d, Rng& rng);

/// Haar-distributed element of O(d): QR of a real Gaussian matrix with
/// sign-normalized diagonal.
Eigen::MatrixXd haar_random_orthogonal(int d, Rng& rng);

}  // namespace accord

#endif  // ACCORD_RANDOM_HPP_
