// Copyright 2026 The qtel Authors
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

#ifndef QTEL_JSON_IO_H
#define QTEL_JSON_IO_H

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qtel/bell.h"
#include "qtel/matrix.h"

namespace qtel {

using Json = nlohmann::ordered_json;

/// Malformed input file. The message names the file and the offending field
/// or the parser's line/column.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(Complex c);
Json to_json(const StateVector &s);
Json to_json(const ComplexMatrix &m);
Json to_json(const BellBasis &b);

/// {"n_qubits": n, "amplitudes": [[re, im], ...]}
StateVector state_from_json(const Json &j, const std::string &where = "state");
/// {"rows": r, "cols": c, "entries": [[re, im], ...]} row-major
ComplexMatrix matrix_from_json(const Json &j, const std::string &where = "matrix");
/// Array of matrix objects, or an object holding that array under "members".
BellBasis basis_from_json(const Json &j, Tolerance tol = {}, const std::string &where = "basis");

Json read_json_file(const std::filesystem::path &path);
StateVector read_state_file(const std::filesystem::path &path);
BellBasis read_basis_file(const std::filesystem::path &path, Tolerance tol = {});

}  // namespace qtel

#endif  // QTEL_JSON_IO_H
