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

#ifndef ACCORD_STATE_IO_HPP_
#define ACCORD_STATE_IO_HPP_

#include <iosfwd>
#include <string>

#include "accord/qstate.hpp"

// State files are JSON objects {"d": d, "matrix": rows} where rows is the
// d^2 x d^2 density matrix, row-major, each entry a [re, im] pair.

namespace accord {

/// Throws BadStateFile on malformed JSON or shape, and the validate_density
/// errors on a well-formed but invalid matrix.
DensityMatrix read_state(std::istream& in);
DensityMatrix read_state_file(const std::string& path);

/// 17 significant digits, so a read-back is bit-exact.
void write_state(std::ostream& out, const DensityMatrix& rho);
void write_state_file(const std::string& path, const DensityMatrix& rho);

}  // namespace accord

#endif  // ACCORD_STATE_IO_HPP_
