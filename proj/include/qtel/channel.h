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

#ifndef QTEL_CHANNEL_H
#define QTEL_CHANNEL_H

#include <array>

#include "qtel/matrix.h"

namespace qtel {

/// Reshapes a state on `row_qubits + col_qubits` qubits into a
/// 2^row_qubits x 2^col_qubits matrix: index i = row * 2^col_qubits + col.
ComplexMatrix state_to_matrix(const StateVector &state, std::size_t row_qubits);
/// Inverse of state_to_matrix (row-major flatten). No normalization check.
StateVector matrix_to_state(const ComplexMatrix &m);

/// 2N-qubit resource state shared between Alice (first N qubits) and Bob
/// (last N qubits), with its reshaped channel matrix E (rows = Alice).
class Channel {
   public:
    Channel(const StateVector &state, std::size_t n, Tolerance tol = {});

    std::size_t n() const { return n_; }
    const StateVector &state() const { return state_; }
    const ComplexMatrix &e_matrix() const { return e_; }

   private:
    std::size_t n_;
    StateVector state_;
    ComplexMatrix e_;
};

Channel channel_from_state(const StateVector &state, std::size_t n, Tolerance tol = {});
Channel channel_from_matrix(const ComplexMatrix &e, Tolerance tol = {});

/// Product of n Bell pairs (|00>+|11>)/sqrt2 wired so that Alice's qubit r is
/// paired with Bob's qubit r; E = 2^(-n/2) * identity.
Channel bell_pairs_channel(std::size_t n);

/// E^dagger E against 2^-n * identity.
ScaledIdentityCheck is_perfect(const Channel &ch, Tolerance tol = {});

/// 2^(n/2) * E, unitary exactly when the channel is perfect.
ComplexMatrix character_matrix(const Channel &ch);

/// The four Hill-Wootters magic-basis states.
std::array<StateVector, 4> hill_wootters_basis();

/// |sum_i c_i^2| over the magic-basis coefficients c_i = <e_i|psi>.
double concurrence_2q(const StateVector &state, Tolerance tol = {});

}  // namespace qtel

#endif  // QTEL_CHANNEL_H
