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

#include "qtel/random.h"

#include <cmath>

namespace qtel {

namespace {

Complex gaussian(Rng &rng) {
    // Box-Muller on our own uniforms; std::normal_distribution is not
    // specified bit-for-bit across standard libraries.
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double t = 2.0 * M_PI * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

StateVector random_state(std::size_t n_qubits, Rng &rng) {
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (Complex &c : amps) {
        c = gaussian(rng);
    }
    return StateVector(std::move(amps)).normalized();
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
    ComplexMatrix q(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> v(dim);
        for (Complex &c : v) {
            c = gaussian(rng);
        }
        // Two passes of modified Gram-Schmidt keep the columns orthonormal to ~1e-15.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < col; ++prev) {
                Complex proj{};
                for (std::size_t r = 0; r < dim; ++r) {
                    proj += std::conj(q(r, prev)) * v[r];
                }
                for (std::size_t r = 0; r < dim; ++r) {
                    v[r] -= proj * q(r, prev);
                }
            }
        }
        double norm = 0;
        for (Complex c : v) {
            norm += std::norm(c);
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < dim; ++r) {
            q(r, col) = v[r] / norm;
        }
    }
    return q;
}

}  // namespace qtel
