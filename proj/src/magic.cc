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

#include "qtel/magic.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qtel/bell.h"
#include "qtel/errors.h"
#include "qtel/random.h"
#include "qtel/teleport.h"

namespace qtel {

namespace {

struct BronKerbosch {
    const AnticommGraph &g;
    std::vector<std::vector<std::size_t>> &out;
    std::vector<std::size_t> clique;

    void expand(std::uint64_t candidates, std::uint64_t excluded) {
        if (candidates == 0) {
            if (excluded == 0) {
                out.push_back(clique);
            }
            return;
        }
        // Tomita pivot: the vertex covering most candidates.
        std::uint64_t pool = candidates | excluded;
        std::size_t pivot = std::countr_zero(pool);
        int best = -1;
        for (std::uint64_t m = pool; m != 0; m &= m - 1) {
            std::size_t u = std::countr_zero(m);
            int cover = std::popcount(candidates & g.adjacency[u]);
            if (cover > best) {
                best = cover;
                pivot = u;
            }
        }
        for (std::uint64_t m = candidates & ~g.adjacency[pivot]; m != 0; m &= m - 1) {
            std::size_t v = std::countr_zero(m);
            std::uint64_t bit = std::uint64_t{1} << v;
            clique.push_back(v);
            expand(candidates & g.adjacency[v], excluded & g.adjacency[v]);
            clique.pop_back();
            candidates &= ~bit;
            excluded |= bit;
        }
    }
};

std::size_t full_dim(std::size_t n) { return std::size_t{1} << n; }

}  // namespace

std::size_t AnticommGraph::degree(std::size_t v) const { return std::popcount(adjacency[v]); }

AnticommGraph build_anticomm_graph(std::size_t n) {
    if (n == 0) {
        throw DomainError("anticommutation graph needs n >= 1");
    }
    if (n > kMaxExhaustiveQubits) {
        throw ResourceError("anticommutation graph capped at n = " + std::to_string(kMaxExhaustiveQubits));
    }
    AnticommGraph g;
    g.n = n;
    std::size_t count = (std::size_t{1} << (2 * n)) - 1;
    for (std::size_t v = 0; v < count; ++v) {
        g.vertices.push_back(pauli_from_quaternary(v + 1, n));
    }
    g.adjacency.assign(count, 0);
    for (std::size_t u = 0; u < count; ++u) {
        for (std::size_t v = 0; v < count; ++v) {
            if (u != v && !commutes(g.vertices[u], g.vertices[v])) {
                g.adjacency[u] |= std::uint64_t{1} << v;
            }
        }
    }
    return g;
}

CliqueReport maximal_anticommuting_sets(const AnticommGraph &g) {
    CliqueReport report;
    if (g.size() == 0) {
        return report;
    }
    std::uint64_t all = g.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
    BronKerbosch bk{g, report.maximal_cliques, {}};
    bk.expand(all, 0);
    for (auto &c : report.maximal_cliques) {
        std::sort(c.begin(), c.end());
        report.max_size = std::max(report.max_size, c.size());
    }
    std::sort(report.maximal_cliques.begin(), report.maximal_cliques.end());
    return report;
}

MagicPartialBasis partial_basis_from_set(std::span<const PauliString> set) {
    for (std::size_t a = 0; a < set.size(); ++a) {
        if (set[a].is_identity()) {
            throw ValidationError("partial basis set contains the identity");
        }
        if (!set[a].is_hermitian()) {
            throw ValidationError("partial basis set contains non-hermitian " + set[a].str());
        }
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            if (set[a].without_phase() == set[b].without_phase()) {
                throw ValidationError("partial basis set repeats " + set[a].without_phase().str());
            }
            if (commutes(set[a], set[b])) {
                throw ValidationError("partial basis set has commuting pair " + set[a].str() + ", " + set[b].str());
            }
        }
    }
    return partial_basis_unchecked(set);
}

MagicPartialBasis partial_basis_unchecked(std::span<const PauliString> set) {
    if (set.empty()) {
        throw ShapeError("partial basis needs at least one Pauli string");
    }
    std::size_t n = set.front().n_qubits();
    for (const auto &p : set) {
        if (p.n_qubits() != n) {
            throw ShapeError("partial basis strings act on different qubit counts");
        }
    }
    MagicPartialBasis b;
    b.n_ = n;
    b.source_set_.assign(set.begin(), set.end());
    std::stable_sort(b.source_set_.begin(), b.source_set_.end(), [](const PauliString &x, const PauliString &y) {
        return x.quaternary_alpha() < y.quaternary_alpha();
    });
    const double norm = 1.0 / std::sqrt(double(full_dim(n)));
    b.matrices_.push_back(scale(ComplexMatrix::identity(full_dim(n)), norm));
    for (const auto &p : b.source_set_) {
        b.matrices_.push_back(scale(matrix_of(p), Complex{0, norm}));
    }
    for (const auto &m : b.matrices_) {
        b.members_.push_back(matrix_to_state(m));
    }
    return b;
}

PartialBasisVerification verify_partial_basis(const MagicPartialBasis &b, std::size_t trials, std::uint64_t seed,
                                              Tolerance tol, CoefficientPhases phases) {
    if (trials == 0) {
        throw DomainError("verify_partial_basis needs trials >= 1");
    }
    PartialBasisVerification v;
    v.trials = trials;
    const std::size_t r = b.size();
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Complex g = frobenius_inner(b.matrices()[i], b.matrices()[j]);
            v.orthonormality_deviation = std::max(v.orthonormality_deviation, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    const std::size_t n = b.n();
    const double target = 1.0 / double(full_dim(n));
    const BellBasis bell = BellBasis::standard(n);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        std::vector<double> mags(r);
        double total = 0;
        for (double &m : mags) {
            m = uniform01(rng) + 1e-3;
            total += m * m;
        }
        const double common = 2 * M_PI * uniform01(rng);
        ComplexMatrix combo(full_dim(n), full_dim(n));
        for (std::size_t l = 0; l < r; ++l) {
            double theta = phases == CoefficientPhases::Common ? common : 2 * M_PI * uniform01(rng);
            combo = add(combo, scale(b.matrices()[l], std::polar(mags[l] / std::sqrt(total), theta)));
        }
        double gram_dev = is_scaled_identity(matmul(dagger(combo), combo), target, tol).max_deviation;

        Channel ch = channel_from_matrix(combo);
        StateVector info = random_state(n, rng);
        double worst = 1.0;
        for (const auto &rec : run_protocol(info, ch, bell, ProtocolMode::exhaustive(), tol)) {
            if (rec.fidelity) {
                worst = std::min(worst, *rec.fidelity);
            }
        }
        double defect = std::max(0.0, 1.0 - worst);
        v.max_gram_deviation = std::max(v.max_gram_deviation, gram_dev);
        v.max_fidelity_defect = std::max(v.max_fidelity_defect, defect);
        if (gram_dev > tol.abs_eps() || defect > tol.abs_eps()) {
            ++v.failures;
        }
    }
    return v;
}

bool WitnessReport::holds() const {
    if (!obstruction) {
        return false;
    }
    for (const auto &e : ghz_expansions) {
        bool escapes = e.residual_norm > 1e-12 || (ghz_perfect_deviation && *ghz_perfect_deviation > 1e-9);
        if (!escapes) {
            return false;
        }
    }
    return true;
}

WitnessReport no_full_magic_basis_witness(std::size_t n) {
    if (n == 0 || n > kMaxExhaustiveQubits) {
        throw DomainError("witness supports 1 <= n <= " + std::to_string(kMaxExhaustiveQubits));
    }
    AnticommGraph g = build_anticomm_graph(n);
    CliqueReport cliques = maximal_anticommuting_sets(g);
    WitnessReport w;
    w.n = n;
    w.vertex_count = g.size();
    w.maximal_clique_count = cliques.maximal_cliques.size();
    w.max_clique = cliques.max_size;
    w.required = g.size();
    w.obstruction = w.max_clique < w.required;

    if (n == 2) {
        std::vector<Complex> amps(16);
        amps[0] = amps[15] = 1.0 / std::sqrt(2.0);
        StateVector ghz(std::move(amps));
        w.ghz_perfect_deviation = is_perfect(channel_from_state(ghz, 2)).max_deviation;
        for (const auto &c : cliques.maximal_cliques) {
            if (c.size() != cliques.max_size) {
                continue;
            }
            std::vector<PauliString> set;
            for (std::size_t v : c) {
                set.push_back(g.vertices[v]);
            }
            MagicPartialBasis b = partial_basis_from_set(set);
            GhzExpansion e;
            e.basis.push_back("I");
            for (const auto &p : b.source_set()) {
                e.basis.push_back(n2_name(p));
            }
            std::vector<Complex> residual(ghz.amplitudes().begin(), ghz.amplitudes().end());
            for (const auto &m : b.members()) {
                Complex coeff = inner(m.amplitudes(), ghz.amplitudes());
                e.coefficients.push_back(coeff);
                for (std::size_t k = 0; k < residual.size(); ++k) {
                    residual[k] -= coeff * m[k];
                }
            }
            double rn = 0;
            for (Complex x : residual) {
                rn += std::norm(x);
            }
            e.residual_norm = std::sqrt(rn);
            e.coefficients_share_phase = true;
            std::optional<Complex> phase;
            for (Complex coeff : e.coefficients) {
                if (std::abs(coeff) < 1e-12) {
                    continue;
                }
                Complex u = coeff / std::abs(coeff);
                if (phase && std::abs(u - *phase) > 1e-9) {
                    e.coefficients_share_phase = false;
                }
                phase = phase.value_or(u);
            }
            w.ghz_expansions.push_back(std::move(e));
        }
    }
    return w;
}

std::string n2_name(const PauliString &p) {
    if (p.n_qubits() != 2) {
        throw ShapeError("letter names exist only for 2-qubit strings");
    }
    static constexpr char kBare[] = {'I', 'F', 'G', 'H'};
    static constexpr char kFamily[] = {'A', 'B', 'C', 'D'};
    std::vector<int> d = QuaternaryIndex(p.quaternary_alpha(), 2).digits();
    if (d[1] == 0) {
        return std::string(1, kBare[d[0]]);
    }
    // Second-factor digit (Z=1, X=2, Y=3) to subscript (X=1, Y=2, Z=3).
    static constexpr int kSubscript[] = {0, 3, 1, 2};
    return std::string(1, kFamily[d[0]]) + std::to_string(kSubscript[d[1]]);
}

std::optional<PauliString> n2_from_name(std::string_view name) {
    static constexpr std::string_view kBare = "IFGH";
    static constexpr std::string_view kFamily = "ABCD";
    static constexpr int kSecondDigit[] = {2, 3, 1};  // subscript 1,2,3 -> X,Y,Z
    if (name.size() == 1) {
        auto pos = kBare.find(name[0]);
        if (pos == std::string_view::npos) {
            return std::nullopt;
        }
        return pauli_from_quaternary(QuaternaryIndex::from_digits({int(pos), 0}), 2);
    }
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '3') {
        auto pos = kFamily.find(name[0]);
        if (pos == std::string_view::npos) {
            return std::nullopt;
        }
        return pauli_from_quaternary(QuaternaryIndex::from_digits({int(pos), kSecondDigit[name[1] - '1']}), 2);
    }
    return std::nullopt;
}

}  // namespace qtel
