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


#include <cmath>

#include "doctest.h"
#include "oracles.h"
#include "qtel/bell.h"
#include "qtel/channel.h"
#include "qtel/errors.h"
#include "qtel/pauli.h"
#include "qtel/random.h"

using namespace qtel;

namespace {

// Completeness straight from the definition: sum_a B_ij conj(B_kl) = d_ik d_jl.
double completeness_oracle(const BellBasis &b) {
    std::size_t d = std::size_t{1} << b.n();
    double worst = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Complex s = 0;
                    for (const auto &m : b.members()) s += m(i, j) * std::conj(m(k, l));
                    double want = (i == k && j == l) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(s - want));
                }
    return worst;
}

StateVector random_perfect_seed(std::size_t n, Rng &rng) {
    auto u = random_unitary(std::size_t{1} << n, rng);
    return matrix_to_state(scale(u, std::pow(2.0, -0.5 * double(n))));
}

}  // namespace

TEST_CASE("standard basis members are Pauli strings on the I side of Bell pairs") {
    for (std::size_t n = 1; n <= 2; ++n) {
        auto b = BellBasis::standard(n);
        CHECK(b.size() == (std::size_t{1} << (2 * n)));
        auto seed = b.member_state(0);
        auto b0 = oracle::reshape({seed.amplitudes().begin(), seed.amplitudes().end()}, std::size_t{1} << n);
        for (std::size_t a = 0; a < b.size(); ++a) {
            auto want = oracle::mul(oracle::pauli(a, n), b0);
            oracle::Mat got = oracle::zeros(b0.size(), b0.size());
            for (std::size_t i = 0; i < b0.size(); ++i)
                for (std::size_t j = 0; j < b0.size(); ++j) got[i][j] = b.member(a)(i, j);
            CHECK(oracle::max_diff(got, want) < 1e-15);
        }
    }
    // n = 1: (|00> + |11>)/sqrt2, Z gives (|00> - |11>)/sqrt2.
    auto b = BellBasis::standard(1);
    CHECK(b.member(1)(1, 1).real() == doctest::Approx(-std::sqrt(0.5)));
    CHECK_THROWS_AS(b.member(4), DomainError);
}

TEST_CASE("generated bases are complete and orthonormal") {
    Rng rng(21);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (int t = 0; t < 10; ++t) {
            auto b = BellBasis::generate_from_seed(random_perfect_seed(n, rng));
            auto c = verify_completeness(b, Tolerance(1e-12));
            CHECK(c.ok);
            CHECK(completeness_oracle(b) < 1e-12);
            CHECK(std::abs(c.max_deviation - completeness_oracle(b)) < 1e-13);
            CHECK(verify_orthonormality(b, Tolerance(1e-12)).ok);
            for (std::size_t a = 0; a < b.size(); ++a) CHECK(is_maximal_member(b, a, Tolerance(1e-12)).ok);
        }
    }
}

TEST_CASE("non-maximal seeds are rejected") {
    CHECK_THROWS_AS(BellBasis::generate_from_seed(StateVector::basis(2, 0)), PreconditionError);
    try {
        BellBasis::generate_from_seed(StateVector({std::sqrt(0.7), 0, 0, std::sqrt(0.3)}));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError &e) {
        CHECK(e.deviation == doctest::Approx(0.2));
    }
}

TEST_CASE("from_members checks the family") {
    auto b = BellBasis::standard(1);
    CHECK_NOTHROW(BellBasis::from_members(b.members()));
    auto dup = b.members();
    dup[3] = dup[2];
    CHECK_THROWS_AS(BellBasis::from_members(dup), ValidationError);
    auto few = b.members();
    few.pop_back();
    CHECK_THROWS_AS(BellBasis::from_members(few), ValidationError);
    auto broken = BellBasis::from_members_unchecked(dup);
    CHECK_FALSE(verify_completeness(broken).ok);
    CHECK_FALSE(verify_orthonormality(broken).ok);
}

TEST_CASE("maximality of a member matrix") {
    CHECK(is_maximal_matrix(ComplexMatrix{{std::sqrt(0.5), 0}, {0, std::sqrt(0.5)}}).ok);
    CHECK_FALSE(is_maximal_matrix(ComplexMatrix{{1, 0}, {0, 0}}).ok);
}
