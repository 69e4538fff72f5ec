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

#ifndef QTEL_BELL_H
#define QTEL_BELL_H

#include <vector>

#include "qtel/matrix.h"

namespace qtel {

/// Orthonormal family of 2^(2n) maximally entangled states on the measured
/// pair {I}{A}, each stored as its 2^n x 2^n coefficient matrix B (rows = I side).
class BellBasis {
   public:
    /// Member alpha = sigma^(alpha) |seed>, with the Pauli string of quaternary
    /// index alpha acting on the I side (first n qubits) of the seed.
    /// Throws PreconditionError if the seed's matrix is not 2^(-n/2)-scaled unitary.
    static BellBasis generate_from_seed(const StateVector &seed, Tolerance tol = {});

    /// Seed = n Bell pairs pairing qubit I_r with A_r.
    static BellBasis standard(std::size_t n);

    /// Arbitrary family. Runs orthonormality, completeness and maximality
    /// checks and throws ValidationError naming the first failure.
    static BellBasis from_members(std::vector<ComplexMatrix> members, Tolerance tol = {});

    /// No checks beyond shape. For diagnostics of broken families.
    static BellBasis from_members_unchecked(std::vector<ComplexMatrix> members);

    std::size_t n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const ComplexMatrix &member(std::size_t alpha) const;
    const std::vector<ComplexMatrix> &members() const { return members_; }
    StateVector member_state(std::size_t alpha) const;

   private:
    BellBasis(std::size_t n, std::vector<ComplexMatrix> members) : n_(n), members_(std::move(members)) {}

    std::size_t n_;
    std::vector<ComplexMatrix> members_;
};

/// sum_alpha B_ij B*_kl against delta_ik delta_jl over all index quadruples.
ScaledIdentityCheck verify_completeness(const BellBasis &basis, Tolerance tol = {});

/// Frobenius Gram matrix of the members against the identity.
ScaledIdentityCheck verify_orthonormality(const BellBasis &basis, Tolerance tol = {});

/// B^dagger B against 2^-n * identity for member alpha.
ScaledIdentityCheck is_maximal_member(const BellBasis &basis, std::size_t alpha, Tolerance tol = {});
ScaledIdentityCheck is_maximal_matrix(const ComplexMatrix &b, Tolerance tol = {});

}  // namespace qtel

#endif  // QTEL_BELL_H
