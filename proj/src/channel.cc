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

#include "qtel/channel.h"

#include <cmath>

#include "qtel/errors.h"

namespace qtel {

ComplexMatrix state_to_matrix(const StateVector &state, std::size_t row_qubits) {
    if (row_qubits > state.n_qubits()) {
        throw ShapeError("cannot split " + std::to_string(state.n_qubits()) + " qubits with " +
                         std::to_string(row_qubits) + " row qubits");
    }
    std::size_t rows = std::size_t{1} << row_qubits;
    std::size_t cols = state.dim() / rows;
    auto amps = state.amplitudes();
    return ComplexMatrix(rows, cols, std::vector<Complex>(amps.begin(), amps.end()));
}

StateVector matrix_to_state(const ComplexMatrix &m) {
    auto e = m.entries();
    return StateVector(std::vector<Complex>(e.begin(), e.end()));
}

Channel::Channel(const StateVector &state, std::size_t n, Tolerance tol) : n_(n), state_(state) {
    if (n == 0 || state.n_qubits() != 2 * n) {
        throw ShapeError("channel on n = " + std::to_string(n) + " needs " + std::to_string(2 * n) +
                         " qubits, state has " + std::to_string(state.n_qubits()));
    }
    if (!state.is_normalized(tol)) {
        throw ValidationError("channel state is not normalized: <E|E> = " + std::to_string(state.norm_squared()));
    }
    e_ = state_to_matrix(state, n);
}

Channel channel_from_state(const StateVector &state, std::size_t n, Tolerance tol) {
    return Channel(state, n, tol);
}

Channel channel_from_matrix(const ComplexMatrix &e, Tolerance tol) {
    if (!e.is_square()) {
        throw ShapeError("channel matrix must be square");
    }
    StateVector s = matrix_to_state(e);
    return Channel(s, s.n_qubits() / 2, tol);
}

Channel bell_pairs_channel(std::size_t n) {
    std::size_t dim = std::size_t{1} << n;
    return channel_from_matrix(scale(ComplexMatrix::identity(dim), 1.0 / std::sqrt(double(dim))));
}

ScaledIdentityCheck is_perfect(const Channel &ch, Tolerance tol) {
    const ComplexMatrix &e = ch.e_matrix();
    return is_scaled_identity(matmul(dagger(e), e), std::ldexp(1.0, -int(ch.n())), tol);
}

ComplexMatrix character_matrix(const Channel &ch) {
    return scale(ch.e_matrix(), std::sqrt(std::ldexp(1.0, int(ch.n()))));
}

std::array<StateVector, 4> hill_wootters_basis() {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex i{0, 1};
    return {
        StateVector({h, 0, 0, h}),
        StateVector({i * h, 0, 0, -i * h}),
        StateVector({0, i * h, i * h, 0}),
        StateVector({0, h, -h, 0}),
    };
}

double concurrence_2q(const StateVector &state, Tolerance tol) {
    if (state.n_qubits() != 2) {
        throw ShapeError("concurrence_2q needs a 2-qubit state");
    }
    if (!state.is_normalized(tol)) {
        throw ValidationError("concurrence_2q needs a normalized state");
    }
    Complex sum{};
    for (const StateVector &e : hill_wootters_basis()) {
        Complex c = inner(e.amplitudes(), state.amplitudes());
        sum += c * c;
    }
    return std::abs(sum);
}

}  // namespace qtel
