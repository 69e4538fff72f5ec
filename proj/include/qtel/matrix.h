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

#ifndef QTEL_MATRIX_H
#define QTEL_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qtel {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// Absolute entrywise tolerance. All quantities handled here are O(1) by
/// normalization, so there is no relative variant.
class Tolerance {
   public:
    constexpr Tolerance() = default;
    explicit Tolerance(double abs_eps);

    constexpr double abs_eps() const { return abs_eps_; }

   private:
    double abs_eps_ = kDefaultTolerance;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> entries() { return entries_; }

    bool all_finite() const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Amplitudes of an n-qubit pure state. Index bits are big-endian: qubit 1 is
/// the most significant bit of the basis index.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(std::vector<Complex> amplitudes);

    /// Computational basis state |index> on n qubits.
    static StateVector basis(std::size_t n_qubits, std::size_t index);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }

    Complex operator[](std::size_t i) const { return amplitudes_[i]; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    double norm_squared() const;
    bool is_normalized(Tolerance tol = {}) const;
    StateVector normalized() const;
    StateVector scaled(Complex s) const;

    /// Reorders qubits so that new qubit r is old qubit perm[r] (0-based).
    StateVector permute_qubits(std::span<const std::size_t> perm) const;

    bool operator==(const StateVector &other) const = default;

   private:
    std::size_t n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
std::vector<Complex> matvec(const ComplexMatrix &a, std::span<const Complex> v);
ComplexMatrix dagger(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);
ComplexMatrix conjugate(const ComplexMatrix &a);
/// Kronecker product, left factor most significant.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
Complex trace(const ComplexMatrix &a);
ComplexMatrix scale(const ComplexMatrix &a, Complex s);
ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b);

/// Frobenius inner product Tr(a^dagger b).
Complex frobenius_inner(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);

/// Gauss-Jordan inverse with partial pivoting. Throws ValidationError when a
/// pivot falls below `singular_eps`.
ComplexMatrix inverse(const ComplexMatrix &a, double singular_eps = 1e-12);
/// Numerical rank by row reduction with partial pivoting.
std::size_t rank(const ComplexMatrix &a, double eps = 1e-10);

struct ScaledIdentityCheck {
    bool ok = false;
    double max_deviation = 0;
};

/// max |a_ij - s delta_ij| <= tol.
ScaledIdentityCheck is_scaled_identity(const ComplexMatrix &a, double s, Tolerance tol = {});
ScaledIdentityCheck is_unitary(const ComplexMatrix &a, Tolerance tol = {});

std::string to_string(const ComplexMatrix &a, int precision = 6);

}  // namespace qtel

#endif  // QTEL_MATRIX_H
