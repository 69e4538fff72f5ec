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

#ifndef QTEL_RANDOM_H
#define QTEL_RANDOM_H

#include <cstdint>
#include <random>

#include "qtel/matrix.h"

namespace qtel {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
double uniform01(Rng &rng);

/// Mixes a master seed with a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Haar-distributed pure state on n qubits (normalized complex Gaussian).
StateVector random_state(std::size_t n_qubits, Rng &rng);

/// Complex Gaussian matrix orthonormalized column by column (Gram-Schmidt).
ComplexMatrix random_unitary(std::size_t dim, Rng &rng);

}  // namespace qtel

#endif  // QTEL_RANDOM_H
