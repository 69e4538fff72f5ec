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

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include "qtel/errors.h"
#include "qtel/magic.h"

namespace qtel {

namespace {

// The sixteen N = 2 states as printed: prefactor and signed basis kets.
struct PrintedState {
    const char *name;
    Complex prefactor;
    const char *kets;
};

constexpr Complex kHalf{0.5, 0};
constexpr Complex kMinusHalfI{0, -0.5};

const PrintedState kPrintedStates[] = {
    {"I", kHalf, "+0000 +0101 +1010 +1111"},       {"F", kHalf, "+0000 +0101 -1010 -1111"},
    {"G", kHalf, "+0010 +0111 +1000 +1101"},       {"H", kMinusHalfI, "+0010 +0111 -1000 -1101"},
    {"A1", kHalf, "+0001 +0100 +1011 +1110"},      {"A2", kMinusHalfI, "+0001 -0100 +1011 -1110"},
    {"A3", kHalf, "+0000 -0101 +1010 -1111"},      {"B1", kHalf, "+0001 +0100 -1011 -1110"},
    {"B2", kMinusHalfI, "+0001 -0100 -1011 +1110"}, {"B3", kHalf, "+0000 -0101 -1010 +1111"},
    {"C1", kHalf, "+0011 +0110 +1001 +1100"},      {"C2", kMinusHalfI, "+0011 -0110 +1001 -1100"},
    {"C3", kHalf, "+0010 -0111 +1000 -1101"},      {"D1", kMinusHalfI, "+0111 +0110 -1001 -1100"},
    {"D2", kHalf, "-0011 +0110 -1001 +1100"},      {"D3", kMinusHalfI, "+0010 -0111 -1000 +1101"},
};

struct PrintedSet {
    const char *label;
    const char *names;
};

// Maximal anticommuting sets, partial bases and quarter bases as printed,
// identity member omitted from the bases.
const PrintedSet kPrintedCliques[] = {
    {"set 1", "F G D1 D2 D2"},   {"set 2", "G H B1 B2 B3"},   {"set 3", "H E C1 C2 C3"},
    {"set 4", "A1 A2 B3 C3 D3"}, {"set 5", "A2 A3 B1 C2 D2"}, {"set 6", "A3 A1 B2 C2 D2"},
    {"set 7", "E G H"},          {"set 8", "A1 A2 A3"},
};

const PrintedSet kPrintedPartialBases[] = {
    {"basis 1", "F G D1 D2 D3"},    {"basis 2", "G H B1 B2 B3"},   {"basis 3", "H F C1 C2 C3"},
    {"basis 4", "A1 A2 B3 C3 D3"},  {"basis 5", "A2 A3 B1 C1 D1"}, {"basis 6", "A2 A3 A1 B2 C2 D2"},
    {"basis 7", "F G H"},           {"basis 8", "A1 A2 A3"},
};

const PrintedSet kPrintedQuarterBases[] = {
    {"quarter 1", "F G H"},    {"quarter 2", "A1 A2 A3"}, {"quarter 3", "A2 A3"},
    {"quarter 4", "B1 B2 B3"}, {"quarter 5", "C1 C2 C3"}, {"quarter 6", "D1 D2 D3"},
};

std::vector<std::string> split_names(const char *text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

StateVector printed_state(const PrintedState &p) {
    std::vector<Complex> amps(16);
    std::istringstream in(p.kets);
    for (std::string tok; in >> tok;) {
        double sign = tok[0] == '-' ? -1.0 : 1.0;
        amps[std::stoul(tok.substr(1), nullptr, 2)] += sign * p.prefactor;
    }
    return StateVector(std::move(amps));
}

std::string join(const std::vector<std::string> &names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i ? ", " : "") + names[i];
    }
    return out + "}";
}

std::vector<std::string> clique_names(const AnticommGraph &g, const std::vector<std::size_t> &clique) {
    std::vector<std::string> out;
    for (std::size_t v : clique) {
        out.push_back(n2_name(g.vertices[v]));
    }
    return out;
}

// Resolves names, records duplicates/unknowns/commuting pairs, and finds the
// enumerated maximal clique with the largest overlap.
SetReconciliation reconcile(const PrintedSet &printed, const AnticommGraph &g, const CliqueReport &cliques) {
    SetReconciliation r;
    r.label = printed.label;
    auto names = split_names(printed.names);
    r.printed = join(names);
    std::vector<std::size_t> resolved;
    std::set<std::string> seen;
    for (const auto &name : names) {
        if (!seen.insert(name).second) {
            r.issues.push_back("duplicate entry " + name);
            continue;
        }
        auto p = n2_from_name(name);
        if (!p) {
            r.issues.push_back("undefined name " + name);
            continue;
        }
        resolved.push_back(p->quaternary_alpha() - 1);
    }
    for (std::size_t a = 0; a < resolved.size(); ++a) {
        for (std::size_t b = a + 1; b < resolved.size(); ++b) {
            if (!g.adjacent(resolved[a], resolved[b])) {
                r.issues.push_back("commuting pair " + n2_name(g.vertices[resolved[a]]) + ", " +
                                   n2_name(g.vertices[resolved[b]]));
            }
        }
    }
    std::sort(resolved.begin(), resolved.end());
    const std::vector<std::size_t> *best = nullptr;
    for (const auto &c : cliques.maximal_cliques) {
        std::vector<std::size_t> common;
        std::set_intersection(c.begin(), c.end(), resolved.begin(), resolved.end(), std::back_inserter(common));
        if (best == nullptr || common.size() > r.overlap) {
            best = &c;
            r.overlap = common.size();
        }
    }
    if (best != nullptr) {
        r.nearest_clique = clique_names(g, *best);
        r.exact_match = *best == resolved && r.issues.empty();
    }
    return r;
}

// Exhaustive search for the largest family of pairwise-disjoint triples.
void best_disjoint(const std::vector<std::uint64_t> &triples, std::size_t start, std::uint64_t used,
                   std::vector<std::size_t> &current, std::vector<std::size_t> &best, std::size_t vertex_count) {
    if (current.size() > best.size()) {
        best = current;
    }
    std::size_t free_vertices = vertex_count - std::popcount(used);
    if (current.size() + free_vertices / 3 <= best.size()) {
        return;
    }
    for (std::size_t t = start; t < triples.size(); ++t) {
        if (triples[t] & used) {
            continue;
        }
        current.push_back(t);
        best_disjoint(triples, t + 1, used | triples[t], current, best, vertex_count);
        current.pop_back();
    }
}

QuarterBasisSummary summarize_quarter_bases(const AnticommGraph &g) {
    QuarterBasisSummary q;
    std::vector<std::uint64_t> triples;
    std::vector<std::vector<std::size_t>> members;
    const std::size_t m = g.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (!g.adjacent(a, b)) {
                continue;
            }
            for (std::size_t c = b + 1; c < m; ++c) {
                if (g.adjacent(a, c) && g.adjacent(b, c)) {
                    triples.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c));
                    members.push_back({a, b, c});
                    if (product(g.vertices[a], g.vertices[b]).without_phase() == g.vertices[c]) {
                        ++q.closed_triples;
                    }
                }
            }
        }
    }
    q.anticommuting_triples = triples.size();
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    best_disjoint(triples, 0, 0, current, best, m);
    q.max_disjoint_family = best.size();
    for (std::size_t t : best) {
        q.disjoint_family.push_back(clique_names(g, members[t]));
    }

    std::vector<std::set<std::string>> listed;
    for (const auto &p : kPrintedQuarterBases) {
        auto names = split_names(p.names);
        std::string label = std::string(p.label) + " " + join(names);
        if (names.size() != 3) {
            q.printed_list_issues.push_back(label + " has " + std::to_string(names.size() + 1) +
                                            " states, a quarter basis has 4");
        }
        for (const auto &prev : listed) {
            std::vector<std::string> shared;
            for (const auto &name : names) {
                if (prev.count(name)) {
                    shared.push_back(name);
                }
            }
            if (!shared.empty()) {
                q.printed_list_issues.push_back(label + " shares " + join(shared) + " with an earlier entry");
                break;
            }
        }
        listed.emplace_back(names.begin(), names.end());
    }
    return q;
}

}  // namespace

N2Catalog n2_catalog() {
    N2Catalog cat;
    for (const auto &p : kPrintedStates) {
        auto pauli = n2_from_name(p.name);
        if (!pauli) {
            throw InternalConsistencyError(std::string("catalog name does not resolve: ") + p.name);
        }
        CatalogEntry e{p.name, *pauli, printed_state(p), matrix_to_state(scale(matrix_of(*pauli), 0.5))};
        e.deviation = max_abs_diff(e.printed.amplitudes(), e.constructed.amplitudes());
        e.matches = e.deviation == 0;
        if (!e.matches) {
            std::ostringstream msg;
            msg << "printed |" << p.name << "> = " << p.kets << " disagrees with (1/2) " << pauli->str(true)
                << " (max amplitude deviation " << e.deviation << ")";
            cat.typos.push_back(msg.str());
        }
        cat.entries.push_back(std::move(e));
    }

    AnticommGraph g = build_anticomm_graph(2);
    cat.cliques = maximal_anticommuting_sets(g);
    for (const auto &c : cat.cliques.maximal_cliques) {
        if (c.size() == cat.cliques.max_size) {
            cat.largest_partial_bases.push_back(clique_names(g, c));
        }
    }
    for (const auto &p : kPrintedCliques) {
        cat.reconciliation.push_back(reconcile(p, g, cat.cliques));
    }
    for (const auto &p : kPrintedPartialBases) {
        cat.reconciliation.push_back(reconcile(p, g, cat.cliques));
    }
    for (const auto &r : cat.reconciliation) {
        if (r.flagged()) {
            std::string why = r.issues.empty() ? "not an enumerated maximal clique" : r.issues.front();
            for (std::size_t i = 1; i < r.issues.size(); ++i) {
                why += "; " + r.issues[i];
            }
            cat.typos.push_back("printed " + r.label + " " + r.printed + ": " + why + " (nearest " +
                                join(r.nearest_clique) + ")");
        }
    }
    cat.quarter = summarize_quarter_bases(g);
    for (const auto &issue : cat.quarter.printed_list_issues) {
        cat.typos.push_back("printed quarter bases: " + issue);
    }
    return cat;
}

}  // namespace qtel
