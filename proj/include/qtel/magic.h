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

#ifndef QTEL_MAGIC_H
#define QTEL_MAGIC_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtel/channel.h"
#include "qtel/matrix.h"
#include "qtel/pauli.h"

// hill_wootters_basis() is declared in channel.h next to concurrence_2q.

namespace qtel {

/// Graph on the 4^n - 1 non-identity Pauli strings, edge iff anticommuting.
/// Vertex v is the string of quaternary index v + 1.
struct AnticommGraph {
    std::size_t n = 0;
    std::vector<PauliString> vertices;
    /// adjacency[v] has bit u set iff vertices u and v anticommute.
    std::vector<std::uint64_t> adjacency;

    std::size_t size() const { return vertices.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return (adjacency[u] >> v) & 1U; }
    std::size_t degree(std::size_t v) const;
};

AnticommGraph build_anticomm_graph(std::size_t n);

struct CliqueReport {
    /// Each clique sorted ascending; cliques in lexicographic order.
    std::vector<std::vector<std::size_t>> maximal_cliques;
    std::size_t max_size = 0;
};

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting).
CliqueReport maximal_anticommuting_sets(const AnticommGraph &g);

/// Identity plus r mutually anticommuting hermitian Pauli strings M_l, realized
/// as the 2n-qubit states of 2^(-n/2) * 1 and 2^(-n/2) * i * M_l.
class MagicPartialBasis {
   public:
    std::size_t n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<StateVector> &members() const { return members_; }
    const std::vector<ComplexMatrix> &matrices() const { return matrices_; }
    /// Sorted by quaternary index; the identity member is implicit.
    const std::vector<PauliString> &source_set() const { return source_set_; }

   private:
    friend MagicPartialBasis partial_basis_unchecked(std::span<const PauliString> set);

    std::size_t n_ = 0;
    std::vector<StateVector> members_;
    std::vector<ComplexMatrix> matrices_;
    std::vector<PauliString> source_set_;
};

/// Throws ValidationError if the set has a commuting pair (named in the
/// message), a non-hermitian string, the identity, or a duplicate.
MagicPartialBasis partial_basis_from_set(std::span<const PauliString> set);
/// Shape checks only. Lets diagnostics build bases that break the magic property.
MagicPartialBasis partial_basis_unchecked(std::span<const PauliString> set);

enum class CoefficientPhases { Common, Independent };

struct PartialBasisVerification {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double orthonormality_deviation = 0;
    /// max over trials of |M^dagger M - 2^-n 1|.
    double max_gram_deviation = 0;
    /// max over trials of 1 - (worst outcome fidelity).
    double max_fidelity_defect = 0;

    bool passed() const { return failures == 0; }
};

/// Random coefficient draws c_l = |c_l| e^(i theta) with sum |c_l|^2 = 1; each
/// combination must be a perfect channel that teleports a random state with
/// fidelity 1. Trial t uses seed derive_seed(seed, t).
PartialBasisVerification verify_partial_basis(const MagicPartialBasis &b, std::size_t trials, std::uint64_t seed,
                                              Tolerance tol = {},
                                              CoefficientPhases phases = CoefficientPhases::Common);

struct GhzExpansion {
    std::vector<std::string> basis;
    std::vector<Complex> coefficients;
    double residual_norm = 0;
    bool coefficients_share_phase = false;
};

struct WitnessReport {
    std::size_t n = 0;
    std::size_t vertex_count = 0;
    std::size_t maximal_clique_count = 0;
    std::size_t max_clique = 0;
    /// Anticommuting strings a full magic basis would need: 4^n - 1.
    std::size_t required = 0;
    bool obstruction = false;
    /// GHZ channel (|0..0> + |1..1>)/sqrt2 against every largest partial basis (n = 2).
    std::optional<double> ghz_perfect_deviation;
    std::vector<GhzExpansion> ghz_expansions;

    bool holds() const;
};

/// Exhaustive clique bound showing no identity-plus-anticommuting construction
/// reaches dimension 4^n for n > 1. Accepts 1 <= n <= 3.
WitnessReport no_full_magic_basis_witness(std::size_t n);

/// Letter name of a 2-qubit string: I,F,G,H for first factor I,Z,X,Y with
/// identity second factor; A,B,C,D with subscripts 1,2,3 for X,Y,Z second factor.
std::string n2_name(const PauliString &p);
/// Inverse of n2_name. Returns nullopt for unknown names.
std::optional<PauliString> n2_from_name(std::string_view name);

struct CatalogEntry {
    std::string name;
    PauliString pauli;
    StateVector printed;
    /// Reshaped (1/2) * matrix_of(pauli).
    StateVector constructed;
    double deviation = 0;
    bool matches = false;
};

struct SetReconciliation {
    std::string label;
    std::string printed;
    std::vector<std::string> issues;
    std::vector<std::string> nearest_clique;
    std::size_t overlap = 0;
    bool exact_match = false;

    bool flagged() const { return !issues.empty() || !exact_match; }
};

struct QuarterBasisSummary {
    std::size_t anticommuting_triples = 0;
    /// Triples closed under multiplication (each is a maximal clique).
    std::size_t closed_triples = 0;
    /// Largest family of quarter bases pairwise sharing only |I>.
    std::size_t max_disjoint_family = 0;
    std::vector<std::vector<std::string>> disjoint_family;
    /// Issues found in the printed list of quarter bases.
    std::vector<std::string> printed_list_issues;
};

struct N2Catalog {
    std::vector<CatalogEntry> entries;
    std::vector<std::string> typos;
    CliqueReport cliques;
    std::vector<std::vector<std::string>> largest_partial_bases;
    std::vector<SetReconciliation> reconciliation;
    QuarterBasisSummary quarter;
};

N2Catalog n2_catalog();

}  // namespace qtel

#endif  // QTEL_MAGIC_H
