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

#include "qtel/matrix.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qtel/errors.h"

namespace qtel {

namespace {

std::string shape_str(const ComplexMatrix &a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(a) + " vs " + shape_str(b));
    }
}

}  // namespace

Tolerance::Tolerance(double abs_eps) : abs_eps_(abs_eps) {
    if (!(abs_eps > 0) || !std::isfinite(abs_eps)) {
        throw DomainError("tolerance must be a positive finite number");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw ShapeError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ShapeError("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    std::size_t d = amplitudes_.size();
    if (d < 2 || !std::has_single_bit(d)) {
        throw ShapeError("state vector length " + std::to_string(d) + " is not 2^n with n >= 1");
    }
    n_qubits_ = static_cast<std::size_t>(std::countr_zero(d));
    for (Complex c : amplitudes_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw ValidationError("state vector contains a non-finite amplitude");
        }
    }
}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
    std::size_t d = std::size_t{1} << n_qubits;
    if (index >= d) {
        throw DomainError("basis index out of range");
    }
    std::vector<Complex> amps(d);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm_squared() const {
    double s = 0;
    for (Complex c : amplitudes_) {
        s += std::norm(c);
    }
    return s;
}

bool StateVector::is_normalized(Tolerance tol) const {
    return std::abs(norm_squared() - 1.0) <= tol.abs_eps();
}

StateVector StateVector::normalized() const {
    double n = std::sqrt(norm_squared());
    if (n == 0) {
        throw ValidationError("cannot normalize the zero vector");
    }
    return scaled(1.0 / n);
}

StateVector StateVector::scaled(Complex s) const {
    std::vector<Complex> amps(amplitudes_);
    for (Complex &c : amps) {
        c *= s;
    }
    return StateVector(std::move(amps));
}

StateVector StateVector::permute_qubits(std::span<const std::size_t> perm) const {
    std::size_t n = n_qubits_;
    if (perm.size() != n) {
        throw ShapeError("permutation length does not match qubit count");
    }
    std::vector<bool> seen(n);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) {
            throw DomainError("not a permutation of the qubits");
        }
        seen[p] = true;
    }
    std::vector<Complex> out(amplitudes_.size());
    for (std::size_t old_index = 0; old_index < amplitudes_.size(); ++old_index) {
        std::size_t new_index = 0;
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t bit = (old_index >> (n - 1 - perm[r])) & 1U;
            new_index |= bit << (n - 1 - r);
        }
        out[new_index] = amplitudes_[old_index];
    }
    return StateVector(std::move(out));
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: " + shape_str(a) + " times " + shape_str(b));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::vector<Complex> matvec(const ComplexMatrix &a, std::span<const Complex> v) {
    if (a.cols() != v.size()) {
        throw ShapeError("matvec: " + shape_str(a) + " times vector of length " + std::to_string(v.size()));
    }
    std::vector<Complex> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            out[i] += a(i, k) * v[k];
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix &a) {
    ComplexMatrix out(a);
    for (Complex &c : out.entries()) {
        c = std::conj(c);
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw ShapeError("trace of non-square " + shape_str(a) + " matrix");
    }
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

ComplexMatrix scale(const ComplexMatrix &a, Complex s) {
    ComplexMatrix out(a);
    for (Complex &c : out.entries()) {
        c *= s;
    }
    return out;
}

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "add");
    ComplexMatrix out(a);
    auto dst = out.entries();
    auto src = b.entries();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] += src[i];
    }
    return out;
}

ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "subtract");
    ComplexMatrix out(a);
    auto dst = out.entries();
    auto src = b.entries();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] -= src[i];
    }
    return out;
}

Complex frobenius_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "frobenius_inner");
    return inner(a.entries(), b.entries());
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    return max_abs_diff(a.entries(), b.entries());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw ShapeError("max_abs_diff: length mismatch");
    }
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw ShapeError("inner: length mismatch");
    }
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

ComplexMatrix inverse(const ComplexMatrix &a, double singular_eps) {
    if (!a.is_square()) {
        throw ShapeError("inverse of non-square " + shape_str(a) + " matrix");
    }
    std::size_t n = a.rows();
    ComplexMatrix work(a);
    ComplexMatrix inv = ComplexMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(work(r, col)) > std::abs(work(pivot, col))) {
                pivot = r;
            }
        }
        if (std::abs(work(pivot, col)) < singular_eps) {
            throw ValidationError("matrix is singular to working precision");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        Complex p = work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work(r, col) == Complex{}) {
                continue;
            }
            Complex f = work(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::size_t rank(const ComplexMatrix &a, double eps) {
    ComplexMatrix work(a);
    std::size_t r = 0;
    for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
        std::size_t pivot = r;
        for (std::size_t i = r + 1; i < work.rows(); ++i) {
            if (std::abs(work(i, col)) > std::abs(work(pivot, col))) {
                pivot = i;
            }
        }
        if (std::abs(work(pivot, col)) <= eps) {
            continue;
        }
        for (std::size_t j = 0; j < work.cols(); ++j) {
            std::swap(work(pivot, j), work(r, j));
        }
        for (std::size_t i = r + 1; i < work.rows(); ++i) {
            Complex f = work(i, col) / work(r, col);
            for (std::size_t j = col; j < work.cols(); ++j) {
                work(i, j) -= f * work(r, j);
            }
        }
        ++r;
    }
    return r;
}

ScaledIdentityCheck is_scaled_identity(const ComplexMatrix &a, double s, Tolerance tol) {
    if (!a.is_square()) {
        throw ShapeError("is_scaled_identity on non-square " + shape_str(a) + " matrix");
    }
    double dev = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Complex target = i == j ? Complex{s} : Complex{};
            dev = std::max(dev, std::abs(a(i, j) - target));
        }
    }
    return {dev <= tol.abs_eps(), dev};
}

ScaledIdentityCheck is_unitary(const ComplexMatrix &a, Tolerance tol) {
    return is_scaled_identity(matmul(dagger(a), a), 1.0, tol);
}

std::string to_string(const ComplexMatrix &a, int precision) {
    std::ostringstream out;
    out.precision(precision);
    out << std::fixed;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Complex c = a(i, j);
            out << (j == 0 ? "" : ", ") << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
        }
        out << (i + 1 == a.rows() ? "]" : "\n");
    }
    return out.str();
}

}  // namespace qtel
