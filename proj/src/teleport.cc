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

#include "qtel/teleport.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "qtel/errors.h"
#include "qtel/pauli.h"
#include "qtel/random.h"

namespace qtel {

namespace {

void require_compatible(const StateVector &info, const Channel &ch, const BellBasis &basis) {
    if (info.n_qubits() != ch.n() || basis.n() != ch.n()) {
        throw ShapeError("information state (" + std::to_string(info.n_qubits()) + " qubits), channel (n = " +
                         std::to_string(ch.n()) + ") and basis (n = " + std::to_string(basis.n()) + ") disagree");
    }
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a.amplitudes(), b.amplitudes()));
}

void apply_correction(OutcomeRecord &rec, const StateVector &info, const ComplexMatrix &u, CorrectionKind kind) {
    rec.correction = kind;
    if (rec.zero_probability) {
        return;
    }
    StateVector corrected = StateVector(matvec(u, rec.bob_state->amplitudes())).normalized();
    rec.fidelity = fidelity(info, corrected);
    rec.corrected_state = std::move(corrected);
}

std::vector<OutcomeRecord> sample(const std::vector<OutcomeRecord> &table, const ProtocolMode &mode) {
    if (mode.shots == 0) {
        throw DomainError("sampled mode needs shots >= 1");
    }
    std::vector<double> cumulative;
    double acc = 0;
    for (const auto &r : table) {
        acc += r.probability;
        cumulative.push_back(acc);
    }
    Rng rng(mode.seed);
    std::vector<OutcomeRecord> out;
    out.reserve(mode.shots);
    for (std::size_t s = 0; s < mode.shots; ++s) {
        double u = uniform01(rng) * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t alpha = std::min<std::size_t>(it - cumulative.begin(), table.size() - 1);
        // Rounding can land on a zero-probability slot at the very end; step back.
        while (alpha > 0 && table[alpha].zero_probability) {
            --alpha;
        }
        out.push_back(table[alpha]);
    }
    return out;
}

std::vector<ComplexMatrix> pauli_corrections(std::size_t n) {
    std::vector<ComplexMatrix> out;
    for (std::size_t a = 0; a < (std::size_t{1} << (2 * n)); ++a) {
        out.push_back(matrix_of(pauli_from_quaternary(a, n)));
    }
    return out;
}

double worst_fidelity(const Channel &ch, const BellBasis &basis, std::span<const ComplexMatrix> corrections,
                      double theta, double phi) {
    StateVector info({std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
    double worst = 1.0;
    for (const auto &rec : run_protocol(info, ch, basis, corrections)) {
        if (rec.fidelity) {
            worst = std::min(worst, *rec.fidelity);
        }
    }
    return worst;
}

// Nelder-Mead on a 2-parameter function.
struct Simplex2 {
    std::array<std::array<double, 2>, 3> x;
    std::array<double, 3> f;
};

template <typename F>
bool nelder_mead(F &&func, Simplex2 &s, double x_tol, std::size_t max_iter, std::size_t &evals) {
    auto eval = [&](const std::array<double, 2> &p) {
        ++evals;
        return func(p[0], p[1]);
    };
    auto lerp = [](const std::array<double, 2> &a, const std::array<double, 2> &b, double t) {
        return std::array<double, 2>{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
    };
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s.f[a] < s.f[b]; });
        Simplex2 sorted;
        for (int k = 0; k < 3; ++k) {
            sorted.x[k] = s.x[idx[k]];
            sorted.f[k] = s.f[idx[k]];
        }
        s = sorted;
        double size = 0;
        for (int k = 1; k < 3; ++k) {
            size = std::max({size, std::abs(s.x[k][0] - s.x[0][0]), std::abs(s.x[k][1] - s.x[0][1])});
        }
        if (size < x_tol) {
            return true;
        }
        std::array<double, 2> centroid = {(s.x[0][0] + s.x[1][0]) / 2, (s.x[0][1] + s.x[1][1]) / 2};
        auto reflected = lerp(centroid, s.x[2], -1.0);
        double fr = eval(reflected);
        if (fr < s.f[0]) {
            auto expanded = lerp(centroid, s.x[2], -2.0);
            double fe = eval(expanded);
            if (fe < fr) {
                s.x[2] = expanded;
                s.f[2] = fe;
            } else {
                s.x[2] = reflected;
                s.f[2] = fr;
            }
        } else if (fr < s.f[1]) {
            s.x[2] = reflected;
            s.f[2] = fr;
        } else {
            auto contracted = fr < s.f[2] ? lerp(centroid, reflected, 0.5) : lerp(centroid, s.x[2], 0.5);
            double fc = eval(contracted);
            if (fc < std::min(fr, s.f[2])) {
                s.x[2] = contracted;
                s.f[2] = fc;
            } else {
                for (int k = 1; k < 3; ++k) {
                    s.x[k] = lerp(s.x[0], s.x[k], 0.5);
                    s.f[k] = eval(s.x[k]);
                }
            }
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(CorrectionKind kind) {
    switch (kind) {
        case CorrectionKind::None:
            return "none";
        case CorrectionKind::Synthesized:
            return "synthesized";
        case CorrectionKind::InverseTransformation:
            return "inverse-transformation";
        case CorrectionKind::Identity:
            return "identity";
        case CorrectionKind::Supplied:
            return "supplied";
    }
    return "unknown";
}

std::vector<OutcomeRecord> composite_expand(const StateVector &info, const Channel &ch, const BellBasis &basis) {
    require_compatible(info, ch, basis);
    if (!info.is_normalized()) {
        throw ValidationError("information state is not normalized");
    }
    std::vector<OutcomeRecord> out;
    out.reserve(basis.size());
    const ComplexMatrix et = transpose(ch.e_matrix());
    for (std::size_t alpha = 0; alpha < basis.size(); ++alpha) {
        // b_k = sum_ij B*_ij I_i E_jk
        std::vector<Complex> b = matvec(et, matvec(dagger(basis.member(alpha)), info.amplitudes()));
        OutcomeRecord rec;
        rec.alpha = alpha;
        for (Complex c : b) {
            rec.probability += std::norm(c);
        }
        rec.zero_probability = rec.probability < kZeroProbability;
        if (!rec.zero_probability) {
            rec.bob_state = StateVector(std::move(b)).normalized();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

TransformationOperator transformation_operator(const Channel &ch, const BellBasis &basis, std::size_t alpha,
                                               Tolerance tol) {
    if (basis.n() != ch.n()) {
        throw ShapeError("channel and basis sizes disagree");
    }
    TransformationOperator op;
    op.alpha = alpha;
    op.matrix = matmul(transpose(ch.e_matrix()), dagger(basis.member(alpha)));
    ComplexMatrix oo = matmul(dagger(op.matrix), op.matrix);
    double s = trace(oo).real() / double(oo.rows());
    auto check = is_scaled_identity(oo, s, tol);
    op.deviation = check.max_deviation;
    op.unitary_scaled = check.ok && s > kZeroProbability;
    op.scale = op.unitary_scaled ? s : 0.0;
    return op;
}

ComplexMatrix correction_unitary(const Channel &ch, const BellBasis &basis, std::size_t alpha, Tolerance tol) {
    if (basis.n() != ch.n()) {
        throw ShapeError("channel and basis sizes disagree");
    }
    if (auto c = is_perfect(ch, tol); !c.ok) {
        std::ostringstream msg;
        msg << "channel is not perfect: |E^dagger E - 2^-n 1| = " << c.max_deviation;
        throw PreconditionError(msg.str(), c.max_deviation);
    }
    if (auto c = is_maximal_member(basis, alpha, tol); !c.ok) {
        std::ostringstream msg;
        msg << "Bell member " << alpha << " is not maximal: |B^dagger B - 2^-n 1| = " << c.max_deviation;
        throw PreconditionError(msg.str(), c.max_deviation);
    }
    ComplexMatrix u = scale(matmul(basis.member(alpha), conjugate(ch.e_matrix())), std::ldexp(1.0, int(ch.n())));
    if (auto c = is_unitary(u, Tolerance(10 * tol.abs_eps())); !c.ok) {
        throw InternalConsistencyError("synthesized correction is not unitary (deviation " +
                                       std::to_string(c.max_deviation) + ")");
    }
    return u;
}

std::vector<OutcomeRecord> run_protocol(const StateVector &info, const Channel &ch, const BellBasis &basis,
                                        ProtocolMode mode, Tolerance tol) {
    std::vector<OutcomeRecord> table = composite_expand(info, ch, basis);
    const bool perfect = is_perfect(ch, tol).ok;
    const std::size_t dim = std::size_t{1} << ch.n();
    for (auto &rec : table) {
        if (perfect && is_maximal_member(basis, rec.alpha, tol).ok) {
            apply_correction(rec, info, correction_unitary(ch, basis, rec.alpha, tol), CorrectionKind::Synthesized);
            continue;
        }
        TransformationOperator op = transformation_operator(ch, basis, rec.alpha, tol);
        if (op.unitary_scaled) {
            apply_correction(rec, info, scale(dagger(op.matrix), 1.0 / std::sqrt(op.scale)),
                             CorrectionKind::InverseTransformation);
        } else {
            apply_correction(rec, info, ComplexMatrix::identity(dim), CorrectionKind::Identity);
        }
    }
    return mode.kind == ProtocolMode::Kind::Sampled ? sample(table, mode) : table;
}

std::vector<OutcomeRecord> run_protocol(const StateVector &info, const Channel &ch, const BellBasis &basis,
                                        std::span<const ComplexMatrix> corrections, ProtocolMode mode,
                                        Tolerance tol) {
    if (corrections.size() != basis.size()) {
        throw ShapeError("need one correction per Bell outcome");
    }
    std::vector<OutcomeRecord> table = composite_expand(info, ch, basis);
    for (auto &rec : table) {
        const ComplexMatrix &u = corrections[rec.alpha];
        if (u.rows() != info.dim() || !u.is_square()) {
            throw ShapeError("correction matrix has the wrong shape");
        }
        if (auto c = is_unitary(u, tol); !c.ok) {
            throw ValidationError("supplied correction " + std::to_string(rec.alpha) + " is not unitary");
        }
        apply_correction(rec, info, u, CorrectionKind::Supplied);
    }
    return mode.kind == ProtocolMode::Kind::Sampled ? sample(table, mode) : table;
}

KernelOperator kernel_operator(const Channel &ch, const BellBasis &basis, Tolerance tol) {
    KernelOperator k;
    if (is_perfect(ch, tol).ok && is_maximal_member(basis, 0, tol).ok) {
        k.matrix = correction_unitary(ch, basis, 0, tol);
        k.is_correction = true;
        k.unitary_scaled = true;
        return k;
    }
    TransformationOperator op = transformation_operator(ch, basis, 0, tol);
    k.matrix = std::move(op.matrix);
    k.unitary_scaled = op.unitary_scaled;
    return k;
}

double worst_outcome_fidelity_1q(const Channel &ch, double theta, double phi) {
    if (ch.n() != 1) {
        throw ShapeError("single-qubit fidelity needs an n = 1 channel");
    }
    auto corrections = pauli_corrections(1);
    return worst_fidelity(ch, BellBasis::standard(1), corrections, theta, phi);
}

MasfiResult masfi_1q(const Channel &ch) {
    if (ch.n() != 1) {
        throw ShapeError("masfi_1q needs an n = 1 channel");
    }
    MasfiResult result;
    const ComplexMatrix &e = ch.e_matrix();
    Complex det = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    if (std::abs(det) < 1e-12) {
        result.degenerate = true;
        result.converged = true;
        return result;
    }

    const BellBasis basis = BellBasis::standard(1);
    const auto corrections = pauli_corrections(1);
    auto objective = [&](double theta, double phi) {
        ++result.evaluations;
        return worst_fidelity(ch, basis, corrections, theta, phi);
    };

    constexpr int kThetaSteps = 64;
    constexpr int kPhiSteps = 128;
    const double dtheta = M_PI / (kThetaSteps - 1);
    const double dphi = 2 * M_PI / kPhiSteps;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kThetaSteps; ++i) {
        for (int j = 0; j < kPhiSteps; ++j) {
            double f = objective(i * dtheta, j * dphi);
            if (f < best) {
                best = f;
                result.theta = i * dtheta;
                result.phi = j * dphi;
            }
        }
    }
    result.grid_value = best;

    Simplex2 s;
    s.x = {{{result.theta, result.phi}, {result.theta + dtheta, result.phi}, {result.theta, result.phi + dphi}}};
    for (int k = 0; k < 3; ++k) {
        s.f[k] = objective(s.x[k][0], s.x[k][1]);
    }
    std::size_t nm_evals = 0;
    result.converged = nelder_mead(objective, s, 1e-4, 500, nm_evals);
    result.value = std::min(best, s.f[0]);
    if (s.f[0] <= best) {
        result.theta = s.x[0][0];
        result.phi = s.x[0][1];
    }
    return result;
}

}  // namespace qtel
