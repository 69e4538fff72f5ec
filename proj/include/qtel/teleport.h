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

#ifndef QTEL_TELEPORT_H
#define QTEL_TELEPORT_H

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtel/bell.h"
#include "qtel/channel.h"
#include "qtel/matrix.h"

namespace qtel {

/// Outcomes below this probability have no defined Bob state.
inline constexpr double kZeroProbability = 1e-14;

enum class CorrectionKind {
    None,                   // composite expansion only
    Synthesized,            // U = 2^n B E*
    InverseTransformation,  // normalized inverse of a scaled-unitary O
    Identity,               // nothing better available
    Supplied,               // caller-provided matrix
};

std::string_view to_string(CorrectionKind kind);

struct OutcomeRecord {
    std::size_t alpha = 0;
    double probability = 0;
    bool zero_probability = false;
    std::optional<StateVector> bob_state;
    std::optional<StateVector> corrected_state;
    std::optional<double> fidelity;
    CorrectionKind correction = CorrectionKind::None;
};

/// O = E^T B^dagger maps the information amplitudes to Bob's unnormalized
/// amplitudes for outcome alpha.
struct TransformationOperator {
    std::size_t alpha = 0;
    ComplexMatrix matrix;
    bool unitary_scaled = false;
    /// s with O^dagger O = s * identity when unitary_scaled, else 0.
    double scale = 0;
    double deviation = 0;
};

struct ProtocolMode {
    enum class Kind { Exhaustive, Sampled };

    static ProtocolMode exhaustive() { return {}; }
    static ProtocolMode sampled(std::uint64_t seed, std::size_t shots) { return {Kind::Sampled, seed, shots}; }

    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    std::size_t shots = 0;
};

/// Bob's state and outcome probability for every alpha, without corrections.
std::vector<OutcomeRecord> composite_expand(const StateVector &info, const Channel &ch, const BellBasis &basis);

TransformationOperator transformation_operator(const Channel &ch, const BellBasis &basis, std::size_t alpha,
                                               Tolerance tol = {});

/// U = 2^n B E*. Requires a perfect channel and a maximal basis member;
/// throws PreconditionError otherwise.
ComplexMatrix correction_unitary(const Channel &ch, const BellBasis &basis, std::size_t alpha, Tolerance tol = {});

/// Full protocol. Imperfect channels do not abort: each outcome gets the best
/// available correction and the fidelity shows the damage. Sampled mode returns
/// one record per shot.
std::vector<OutcomeRecord> run_protocol(const StateVector &info, const Channel &ch, const BellBasis &basis,
                                        ProtocolMode mode = {}, Tolerance tol = {});

/// Same, with Bob applying corrections[alpha] regardless of the channel.
std::vector<OutcomeRecord> run_protocol(const StateVector &info, const Channel &ch, const BellBasis &basis,
                                        std::span<const ComplexMatrix> corrections, ProtocolMode mode = {},
                                        Tolerance tol = {});

struct KernelOperator {
    ComplexMatrix matrix;
    /// True when `matrix` is the synthesized correction U^(0).
    bool is_correction = false;
    bool unitary_scaled = false;
};

/// The alpha = 0 operator: U^(0) for perfect channels, O^(0) otherwise.
KernelOperator kernel_operator(const Channel &ch, const BellBasis &basis, Tolerance tol = {});

struct MasfiResult {
    double value = 0;
    bool degenerate = false;
    bool converged = false;
    double theta = 0;
    double phi = 0;
    double grid_value = 0;
    std::size_t evaluations = 0;
};

/// Minimum over the Bloch sphere of the worst per-outcome fidelity for a
/// single-qubit teleport with the standard Bell basis and Bob applying the
/// Pauli of the outcome index.
MasfiResult masfi_1q(const Channel &ch);

/// Worst per-outcome fidelity for one information state, same setup as masfi_1q.
double worst_outcome_fidelity_1q(const Channel &ch, double theta, double phi);

}  // namespace qtel

#endif  // QTEL_TELEPORT_H
