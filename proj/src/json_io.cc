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

#include "qtel/json_io.h"

#include <fstream>
#include <sstream>

namespace qtel {

namespace {

Complex complex_from_json(const Json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(where + ": expected [re, im] with two numbers, got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const Json &field(const Json &j, const char *name, const std::string &where) {
    if (!j.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    auto it = j.find(name);
    if (it == j.end()) {
        throw ParseError(where + ": missing field \"" + name + "\"");
    }
    return *it;
}

std::size_t size_field(const Json &j, const char *name, const std::string &where) {
    const Json &v = field(j, name, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(where + "." + name + ": expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::vector<Complex> complex_array(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        throw ParseError(where + ": expected an array of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(complex_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const StateVector &s) {
    Json amps = Json::array();
    for (Complex c : s.amplitudes()) {
        amps.push_back(to_json(c));
    }
    return {{"n_qubits", s.n_qubits()}, {"amplitudes", std::move(amps)}};
}

Json to_json(const ComplexMatrix &m) {
    Json entries = Json::array();
    for (Complex c : m.entries()) {
        entries.push_back(to_json(c));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const BellBasis &b) {
    Json out = Json::array();
    for (const auto &m : b.members()) {
        out.push_back(to_json(m));
    }
    return out;
}

StateVector state_from_json(const Json &j, const std::string &where) {
    std::size_t n = size_field(j, "n_qubits", where);
    auto amps = complex_array(field(j, "amplitudes", where), where + ".amplitudes");
    if (n == 0 || n >= 30 || amps.size() != (std::size_t{1} << n)) {
        throw ParseError(where + ".amplitudes: length " + std::to_string(amps.size()) + " does not match 2^" +
                         std::to_string(n));
    }
    try {
        return StateVector(std::move(amps));
    } catch (const std::exception &e) {
        throw ParseError(where + ": " + e.what());
    }
}

ComplexMatrix matrix_from_json(const Json &j, const std::string &where) {
    std::size_t rows = size_field(j, "rows", where);
    std::size_t cols = size_field(j, "cols", where);
    auto entries = complex_array(field(j, "entries", where), where + ".entries");
    if (entries.size() != rows * cols) {
        throw ParseError(where + ".entries: " + std::to_string(entries.size()) + " entries for a " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

BellBasis basis_from_json(const Json &j, Tolerance tol, const std::string &where) {
    // Accept a whole `bell gen` report as well as the bare member array.
    if (j.is_object() && j.contains("members")) {
        return basis_from_json(j["members"], tol, where + ".members");
    }
    if (!j.is_array()) {
        throw ParseError(where + ": expected an array of matrix objects");
    }
    std::vector<ComplexMatrix> members;
    for (std::size_t i = 0; i < j.size(); ++i) {
        members.push_back(matrix_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    }
    try {
        return BellBasis::from_members(std::move(members), tol);
    } catch (const std::exception &e) {
        throw ParseError(where + ": " + e.what());
    }
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string() + ": cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

StateVector read_state_file(const std::filesystem::path &path) {
    return state_from_json(read_json_file(path), path.string());
}

BellBasis read_basis_file(const std::filesystem::path &path, Tolerance tol) {
    return basis_from_json(read_json_file(path), tol, path.string());
}

}  // namespace qtel
