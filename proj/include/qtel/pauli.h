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

#ifndef QTEL_PAULI_H
#define QTEL_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtel/matrix.h"

namespace qtel {

inline constexpr std::size_t kMaxPauliQubits = 32;

/// Base-4 index alpha = sum_j digit_j * 4^(n-j), digit 1 most significant.
/// Digits 0,1,2,3 select I, Z, X, Y on the corresponding qubit.
class QuaternaryIndex {
   public:
    QuaternaryIndex(std::uint64_t alpha, std::size_t n);
    static QuaternaryIndex from_digits(const std::vector<int> &digits);

    std::uint64_t alpha() const { return alpha_; }
    std::size_t n() const { return n_; }
    std::vector<int> digits() const;

   private:
    std::uint64_t alpha_;
    std::size_t n_;
};

/// Symplectic N-qubit Pauli product: i^phase_power * (tensor of I/X/Y/Z), with
/// Y the hermitian Pauli. Qubit r (1-based) lives at bit n-r of each mask, so
/// masks line up with big-endian basis indices.
class PauliString {
   public:
    PauliString(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits, int phase_power = 0);

    static PauliString identity(std::size_t n_qubits);
    /// Parses e.g. "ZX", "Y⊗I", "-i·XZ", "+i*YY".
    static PauliString parse(std::string_view text);

    std::size_t n_qubits() const { return n_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }
    int phase_power() const { return phase_; }

    /// Single-qubit factor on qubit r (1-based): 'I', 'X', 'Y' or 'Z'.
    char factor(std::size_t r) const;
    bool is_identity() const { return x_ == 0 && z_ == 0; }
    /// Tensor factors are hermitian, so the string is hermitian iff i^phase is real.
    bool is_hermitian() const { return phase_ % 2 == 0; }
    /// Quaternary index of the unphased string (digits I,Z,X,Y = 0,1,2,3).
    std::uint64_t quaternary_alpha() const;
    PauliString without_phase() const { return {n_, x_, z_, 0}; }

    /// Compact form "i·ZX"; with `tensor_glyph` the factors are joined by "⊗".
    std::string str(bool tensor_glyph = false) const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::size_t n_;
    std::uint64_t x_;
    std::uint64_t z_;
    int phase_;
};

PauliString pauli_from_quaternary(const QuaternaryIndex &alpha, std::size_t n);
PauliString pauli_from_quaternary(std::uint64_t alpha, std::size_t n);

/// Exact product with tracked phase: matrix_of(product(p, q)) == matmul(matrix_of(p), matrix_of(q)).
PauliString product(const PauliString &p, const PauliString &q);
bool commutes(const PauliString &p, const PauliString &q);
ComplexMatrix matrix_of(const PauliString &p);

struct PropertyCheck {
    std::string name;
    bool passed = true;
    std::string counterexample;
};

/// Exhaustive check of the algebraic properties of the 4^n unphased strings.
struct FamilyPropertyReport {
    std::size_t n = 0;
    std::vector<PropertyCheck> properties;
    /// anticommuting_partners[a] counts strings anticommuting with string a.
    std::vector<int> anticommuting_partners;
    bool all_nonidentity_mutually_anticommute = false;

    bool all_passed() const;
};

inline constexpr std::size_t kMaxExhaustiveQubits = 3;

FamilyPropertyReport family_property_report(std::size_t n);

}  // namespace qtel

#endif  // QTEL_PAULI_H
