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

#include "qtel/bell.h"

#include <bit>
#include <cmath>
#include <sstream>

#include "qtel/channel.h"
#include "qtel/errors.h"
#include "qtel/pauli.h"

namespace qtel {

namespace {

std::size_t validate_shapes(const std::vector<ComplexMatrix> &members) {
    if (members.empty()) {
        throw ShapeError("Bell basis needs at least one member");
    }
    std::size_t dim = members.front().rows();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw ShapeError("Bell basis members must be 2^n x 2^n with n >= 1");
    }
    for (const auto &m : members) {
        if (m.rows() != dim || m.cols() != dim) {
            throw ShapeError("Bell basis members have inconsistent shapes");
        }
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

BellBasis BellBasis::generate_from_seed(const StateVector &seed, Tolerance tol) {
    if (seed.n_qubits() % 2 != 0) {
        throw ShapeError("Bell seed must have an even number of qubits");
    }
    if (!seed.is_normalized(tol)) {
        throw ValidationError("Bell seed is not normalized");
    }
    std::size_t n = seed.n_qubits() / 2;
    ComplexMatrix b0 = state_to_matrix(seed, n);
    auto check = is_maximal_matrix(b0, tol);
    if (!check.ok) {
        std::ostringstream msg;
        msg << "Bell seed is not maximally entangled: |B^dagger B - 2^-n 1| = " << check.max_deviation;
        throw PreconditionError(msg.str(), check.max_deviation);
    }
    std::vector<ComplexMatrix> members;
    std::size_t count = std::size_t{1} << (2 * n);
    members.reserve(count);
    for (std::size_t alpha = 0; alpha < count; ++alpha) {
        members.push_back(matmul(matrix_of(pauli_from_quaternary(alpha, n)), b0));
    }
    return BellBasis(n, std::move(members));
}

BellBasis BellBasis::standard(std::size_t n) {
    return generate_from_seed(bell_pairs_channel(n).state());
}

BellBasis BellBasis::from_members(std::vector<ComplexMatrix> members, Tolerance tol) {
    BellBasis b = from_members_unchecked(std::move(members));
    if (b.size() != (std::size_t{1} << (2 * b.n()))) {
        throw ValidationError("Bell basis for n = " + std::to_string(b.n()) + " needs " +
                              std::to_string(std::size_t{1} << (2 * b.n())) + " members");
    }
    if (auto c = verify_orthonormality(b, tol); !c.ok) {
        throw ValidationError("Bell basis members are not orthonormal (deviation " +
                              std::to_string(c.max_deviation) + ")");
    }
    if (auto c = verify_completeness(b, tol); !c.ok) {
        throw ValidationError("Bell basis is not complete (deviation " + std::to_string(c.max_deviation) + ")");
    }
    for (std::size_t a = 0; a < b.size(); ++a) {
        if (auto c = is_maximal_member(b, a, tol); !c.ok) {
            throw ValidationError("Bell basis member " + std::to_string(a) + " is not maximally entangled (deviation " +
                                  std::to_string(c.max_deviation) + ")");
        }
    }
    return b;
}

BellBasis BellBasis::from_members_unchecked(std::vector<ComplexMatrix> members) {
    std::size_t n = validate_shapes(members);
    return BellBasis(n, std::move(members));
}

const ComplexMatrix &BellBasis::member(std::size_t alpha) const {
    if (alpha >= members_.size()) {
        throw DomainError("Bell member index " + std::to_string(alpha) + " out of range");
    }
    return members_[alpha];
}

StateVector BellBasis::member_state(std::size_t alpha) const { return matrix_to_state(member(alpha)); }

ScaledIdentityCheck verify_completeness(const BellBasis &basis, Tolerance tol) {
    // sum_alpha B_ij B*_kl is the (ij, kl) entry of sum_alpha |B><B|.
    std::size_t d = std::size_t{1} << basis.n();
    std::size_t dd = d * d;
    ComplexMatrix resolution(dd, dd);
    for (const auto &b : basis.members()) {
        auto e = b.entries();
        for (std::size_t p = 0; p < dd; ++p) {
            for (std::size_t q = 0; q < dd; ++q) {
                resolution(p, q) += e[p] * std::conj(e[q]);
            }
        }
    }
    return is_scaled_identity(resolution, 1.0, tol);
}

ScaledIdentityCheck verify_orthonormality(const BellBasis &basis, Tolerance tol) {
    std::size_t m = basis.size();
    ComplexMatrix gram(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            gram(a, b) = frobenius_inner(basis.member(a), basis.member(b));
        }
    }
    return is_scaled_identity(gram, 1.0, tol);
}

ScaledIdentityCheck is_maximal_member(const BellBasis &basis, std::size_t alpha, Tolerance tol) {
    return is_maximal_matrix(basis.member(alpha), tol);
}

ScaledIdentityCheck is_maximal_matrix(const ComplexMatrix &b, Tolerance tol) {
    if (!b.is_square() || b.rows() < 2 || !std::has_single_bit(b.rows())) {
        throw ShapeError("maximality check needs a 2^n x 2^n matrix");
    }
    return is_scaled_identity(matmul(dagger(b), b), 1.0 / double(b.rows()), tol);
}

}  // namespace qtel
