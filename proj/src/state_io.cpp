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

#include "accord/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

namespace accord {

namespace {

Error bad(const std::string& what) { return Error(ErrorCode::BadStateFile, what); }

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

DensityMatrix read_state(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw bad(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("matrix")) throw bad("state file needs \"d\" and \"matrix\"");
  if (!j["d"].is_number_integer()) throw bad("\"d\" must be an integer");
  const long d = j["d"].get<long>();
  if (d < 2 || d > 64) throw Error(ErrorCode::BadDimension, "local dimension out of range");
  const int n = static_cast<int>(d * d);
  const nlohmann::json& rows = j["matrix"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw bad("\"matrix\" must have d^2 rows");
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const nlohmann::json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw bad("every row must have d^2 entries");
    for (int c = 0; c < n; ++c) {
      const nlohmann::json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw bad("entries must be [re, im] number pairs");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return validate_density(m, static_cast<int>(d));
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad("cannot open " + path);
  return read_state(in);
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  const CMatrix& m = rho.matrix();
  out << "{\"d\": " << rho.dim_local() << ", \"matrix\": [";
  for (int r = 0; r < m.rows(); ++r) {
    out << (r ? ",\n  [" : "\n  [");
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ", ";
      out << '[' << g17(m(r, c).real()) << ", " << g17(m(r, c).imag()) << ']';
    }
    out << ']';
  }
  out << "\n]}\n";
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw bad("cannot write " + path);
  write_state(out, rho);
}

}  // namespace accord
