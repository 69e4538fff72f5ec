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
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "qtel/channel.h"
#include "qtel/errors.h"
#include "qtel/magic.h"

using namespace qtel;

namespace {

// Maximal anticommuting sets by brute force over all subsets of the 15
// non-identity 2-qubit strings, with anticommutation decided on dense matrices.
std::multiset<std::size_t> brute_force_clique_sizes_n2() {
    const std::size_t v = 15;
    bool anti[15][15];
    for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b) {
            auto pa = oracle::pauli(a + 1, 2), pb = oracle::pauli(b + 1, 2);
            auto ab = oracle::mul(pa, pb), ba = oracle::mul(pb, pa);
            double sum = 0;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) sum = std::max(sum, std::abs(ab[i][j] + ba[i][j]));
            anti[a][b] = sum < 1e-15;
        }
    auto is_clique = [&](std::uint32_t m) {
        for (std::size_t a = 0; a < v; ++a)
            for (std::size_t b = a + 1; b < v; ++b)
                if ((m >> a & 1) && (m >> b & 1) && !anti[a][b]) return false;
        return true;
    };
    std::multiset<std::size_t> sizes;
    for (std::uint32_t m = 1; m < (1U << v); ++m) {
        if (!is_clique(m)) continue;
        bool maximal = true;
        for (std::size_t c = 0; c < v && maximal; ++c)
            if (!(m >> c & 1) && is_clique(m | (1U << c))) maximal = false;
        if (maximal) sizes.insert(std::size_t(__builtin_popcount(m)));
    }
    return sizes;
}

}  // namespace

TEST_CASE("anticommutation graph shape") {
    auto g1 = build_anticomm_graph(1);
    CHECK(g1.size() == 3);
    for (std::size_t v = 0; v < 3; ++v) CHECK(g1.degree(v) == 2);
    auto g2 = build_anticomm_graph(2);
    CHECK(g2.size() == 15);
    for (std::size_t v = 0; v < 15; ++v) {
        CHECK(g2.degree(v) == 8);
        CHECK_FALSE(g2.adjacent(v, v));
        CHECK(g2.vertices[v].quaternary_alpha() == v + 1);
    }
    CHECK(build_anticomm_graph(3).size() == 63);
    CHECK_THROWS_AS(build_anticomm_graph(4), ResourceError);
}

TEST_CASE("maximal cliques for n = 2 match brute force") {
    auto r = maximal_anticommuting_sets(build_anticomm_graph(2));
    std::multiset<std::size_t> sizes;
    for (const auto &c : r.maximal_cliques) sizes.insert(c.size());
    CHECK(sizes == brute_force_clique_sizes_n2());
    CHECK(r.max_size == 5);
    CHECK(sizes.count(5) == 6);
    CHECK(sizes.count(3) == 20);
    CHECK(r.maximal_cliques.size() == 26);
    CHECK(std::is_sorted(r.maximal_cliques.begin(), r.maximal_cliques.end()));
    // Every string lies in exactly two of the largest sets.
    std::vector<int> hits(15);
    for (const auto &c : r.maximal_cliques)
        if (c.size() == 5)
            for (auto v : c) ++hits[v];
    for (int h : hits) CHECK(h == 2);
}

TEST_CASE("clique sizes for n = 1 and n = 3") {
    auto r1 = maximal_anticommuting_sets(build_anticomm_graph(1));
    CHECK(r1.maximal_cliques.size() == 1);
    CHECK(r1.max_size == 3);
    CHECK(maximal_anticommuting_sets(build_anticomm_graph(3)).max_size == 7);
}

TEST_CASE("enumeration is deterministic") {
    auto g = build_anticomm_graph(3);
    CHECK(maximal_anticommuting_sets(g).maximal_cliques == maximal_anticommuting_sets(g).maximal_cliques);
}

TEST_CASE("letter names round-trip") {
    for (std::size_t a = 0; a < 16; ++a) {
        auto p = pauli_from_quaternary(a, 2);
        auto back = n2_from_name(n2_name(p));
        REQUIRE(back);
        CHECK(*back == p);
    }
    CHECK(n2_name(PauliString::parse("ZI")) == "F");
    CHECK(n2_name(PauliString::parse("XI")) == "G");
    CHECK(n2_name(PauliString::parse("YI")) == "H");
    CHECK(n2_name(PauliString::parse("IX")) == "A1");
    CHECK(n2_name(PauliString::parse("YZ")) == "D3");
    CHECK_FALSE(n2_from_name("E"));
    CHECK_THROWS_AS(n2_name(PauliString::parse("X")), ShapeError);
}

TEST_CASE("partial bases reject bad sets") {
    std::vector<PauliString> commuting{PauliString::parse("ZI"), PauliString::parse("IZ")};
    CHECK_THROWS_WITH_AS(partial_basis_from_set(commuting), doctest::Contains("commuting pair"), ValidationError);
    std::vector<PauliString> identity{PauliString::identity(2)};
    CHECK_THROWS_AS(partial_basis_from_set(identity), ValidationError);
    std::vector<PauliString> phased{PauliString::parse("i·ZI")};
    CHECK_THROWS_AS(partial_basis_from_set(phased), ValidationError);
    std::vector<PauliString> dup{PauliString::parse("ZI"), PauliString::parse("ZI")};
    CHECK_THROWS_AS(partial_basis_from_set(dup), ValidationError);
    std::vector<PauliString> mixed{PauliString::parse("Z"), PauliString::parse("XI")};
    CHECK_THROWS_AS(partial_basis_from_set(mixed), ShapeError);
}

TEST_CASE("partial basis members are orthonormal and maximally entangled") {
    std::vector<PauliString> set{PauliString::parse("XI"), PauliString::parse("ZI"), PauliString::parse("YX"),
                                 PauliString::parse("YY"), PauliString::parse("YZ")};
    auto b = partial_basis_from_set(set);
    CHECK(b.size() == 6);
    CHECK(b.source_set().front() == PauliString::parse("ZI"));
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            Complex ip = inner(b.members()[i].amplitudes(), b.members()[j].amplitudes());
            CHECK(std::abs(ip - Complex(i == j ? 1 : 0)) < 1e-15);
        }
        CHECK(is_perfect(channel_from_matrix(b.matrices()[i])).ok);
    }
}

TEST_CASE("every maximal clique verifies with common phases") {
    auto g = build_anticomm_graph(2);
    for (const auto &c : maximal_anticommuting_sets(g).maximal_cliques) {
        std::vector<PauliString> set;
        for (auto v : c) set.push_back(g.vertices[v]);
        auto v = verify_partial_basis(partial_basis_from_set(set), 100, 0, Tolerance(1e-12));
        CHECK(v.passed());
        CHECK(v.max_gram_deviation < 1e-12);
        CHECK(v.max_fidelity_defect < 1e-12);
    }
}

TEST_CASE("independent phases break the magic property") {
    std::vector<PauliString> set{PauliString::parse("ZI"), PauliString::parse("XI")};
    auto v = verify_partial_basis(partial_basis_from_set(set), 50, 3, {}, CoefficientPhases::Independent);
    CHECK_FALSE(v.passed());
    CHECK(v.max_gram_deviation > 1e-3);
}

TEST_CASE("commuting sets fail verification") {
    std::vector<PauliString> set{PauliString::parse("ZI"), PauliString::parse("IZ")};
    auto v = verify_partial_basis(partial_basis_unchecked(set), 20, 1);
    CHECK_FALSE(v.passed());
    CHECK(v.failures > 0);
}

TEST_CASE("no full magic basis beyond one qubit") {
    auto w1 = no_full_magic_basis_witness(1);
    CHECK_FALSE(w1.obstruction);
    CHECK(w1.max_clique == 3);
    auto w2 = no_full_magic_basis_witness(2);
    CHECK(w2.obstruction);
    CHECK(w2.max_clique == 5);
    CHECK(w2.required == 15);
    CHECK(w2.holds());
    REQUIRE(w2.ghz_perfect_deviation);
    CHECK(*w2.ghz_perfect_deviation == doctest::Approx(0.25));
    CHECK(w2.ghz_expansions.size() == 6);
    auto w3 = no_full_magic_basis_witness(3);
    CHECK(w3.max_clique == 7);
    CHECK(w3.required == 63);
    CHECK(w3.obstruction);
}

TEST_CASE("catalog reconstructs the sixteen states and flags the printed typos") {
    auto cat = n2_catalog();
    REQUIRE(cat.entries.size() == 16);
    std::vector<std::string> mismatched;
    for (const auto &e : cat.entries)
        if (!e.matches) mismatched.push_back(e.name);
    CHECK(mismatched == std::vector<std::string>{"D1", "D2"});
    CHECK(cat.largest_partial_bases.size() == 6);
    auto flagged = [&](const std::string &label) {
        for (const auto &r : cat.reconciliation)
            if (r.label == label) return r.flagged();
        FAIL("missing label " << label);
        return false;
    };
    CHECK(flagged("set 1"));
    CHECK(flagged("set 3"));
    CHECK(flagged("set 5"));
    CHECK(flagged("set 7"));
    CHECK(flagged("basis 6"));
    CHECK_FALSE(flagged("set 2"));
    CHECK_FALSE(flagged("basis 1"));
    CHECK(cat.quarter.anticommuting_triples == 80);
    CHECK(cat.quarter.closed_triples == 20);
    CHECK(cat.quarter.max_disjoint_family == 5);
    CHECK(cat.quarter.disjoint_family.size() == 5);
    CHECK_FALSE(cat.quarter.printed_list_issues.empty());
}
