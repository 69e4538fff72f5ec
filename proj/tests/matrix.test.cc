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
#include <limits>

#include "doctest.h"
#include "oracles.h"
#include "qtel/errors.h"
#include "qtel/matrix.h"
#include "qtel/random.h"

using namespace qtel;

namespace {

ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng &rng) {
    ComplexMatrix m(r, c);
    for (auto &e : m.entries()) {
        e = {2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1};
    }
    return m;
}

oracle::Mat to_oracle(const ComplexMatrix &m) {
    oracle::Mat out = oracle::zeros(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

}  // namespace

TEST_CASE("tolerance rejects non-positive and non-finite values") {
    CHECK_THROWS_AS(Tolerance(0.0), DomainError);
    CHECK_THROWS_AS(Tolerance(-1e-9), DomainError);
    CHECK_THROWS_AS(Tolerance(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK(Tolerance().abs_eps() == doctest::Approx(1e-9));
}

TEST_CASE("state vectors validate length and finiteness") {
    CHECK_THROWS_AS(StateVector({1.0}), ShapeError);
    CHECK_THROWS_AS(StateVector({1.0, 0.0, 0.0}), ShapeError);
    CHECK_THROWS_AS(StateVector({1.0, std::numeric_limits<double>::infinity()}), ValidationError);
    StateVector s({0.6, Complex(0, 0.8)});
    CHECK(s.n_qubits() == 1);
    CHECK(s.is_normalized());
    CHECK_FALSE(s.scaled(2.0).is_normalized());
    CHECK(s.scaled(3.0).normalized().is_normalized());
    CHECK_THROWS_AS(StateVector({0.0, 0.0}).normalized(), ValidationError);
}

TEST_CASE("basis states are big-endian") {
    StateVector s = StateVector::basis(3, 4);  // |100>
    CHECK(s[4] == Complex(1));
    CHECK(s.norm_squared() == 1.0);
    CHECK_THROWS_AS(StateVector::basis(2, 4), DomainError);
}

TEST_CASE("permute_qubits moves qubit 1 to the end") {
    StateVector s = StateVector::basis(3, 0b100);
    std::vector<std::size_t> perm{1, 2, 0};
    StateVector p = s.permute_qubits(perm);
    CHECK(p[0b001] == Complex(1));
    std::vector<std::size_t> bad{0, 0, 1};
    CHECK_THROWS_AS(s.permute_qubits(bad), DomainError);
}

TEST_CASE("products agree with the naive oracle") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        auto a = random_matrix(3, 4, rng);
        auto b = random_matrix(4, 2, rng);
        CHECK(oracle::max_diff(to_oracle(matmul(a, b)), oracle::mul(to_oracle(a), to_oracle(b))) < 1e-14);
        CHECK(oracle::max_diff(to_oracle(kron(a, b)), oracle::kron(to_oracle(a), to_oracle(b))) < 1e-14);
        CHECK(oracle::max_diff(to_oracle(dagger(a)), oracle::adj(to_oracle(a))) == 0);
    }
    CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("algebraic identities on random matrices") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        auto a = random_matrix(4, 4, rng);
        auto b = random_matrix(4, 4, rng);
        CHECK(max_abs_diff(dagger(matmul(a, b)), matmul(dagger(b), dagger(a))) < 1e-13);
        CHECK(max_abs_diff(transpose(a), conjugate(dagger(a))) == 0);
        CHECK(std::abs(trace(matmul(a, b)) - trace(matmul(b, a))) < 1e-13);
        CHECK(std::abs(frobenius_inner(a, b) - trace(matmul(dagger(a), b))) < 1e-13);
        CHECK(max_abs_diff(subtract(add(a, b), b), a) < 1e-15);
        CHECK(max_abs_diff(matmul(a, inverse(a)), ComplexMatrix::identity(4)) < 1e-10);
    }
}

TEST_CASE("inverse and rank detect singular matrices") {
    ComplexMatrix s{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(inverse(s), ValidationError);
    CHECK(rank(s) == 1);
    CHECK(rank(ComplexMatrix::identity(5)) == 5);
    CHECK_THROWS_AS(inverse(ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("random unitaries are unitary and Haar-like") {
    Rng rng(2);
    for (std::size_t d : {2, 4, 8}) {
        auto u = random_unitary(d, rng);
        CHECK(is_unitary(u, Tolerance(1e-12)).ok);
    }
    auto u = random_unitary(4, rng);
    auto scaled = scale(u, 0.5);
    CHECK_FALSE(is_unitary(scaled).ok);
    CHECK(is_scaled_identity(matmul(dagger(scaled), scaled), 0.25, Tolerance(1e-12)).ok);
    CHECK(is_scaled_identity(matmul(dagger(scaled), scaled), 1.0).max_deviation == doctest::Approx(0.75));
}

TEST_CASE("random states are normalized and deterministic per seed") {
    Rng a(99), b(99);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto s = random_state(n, a);
        CHECK(s.is_normalized(Tolerance(1e-12)));
        CHECK(s == random_state(n, b));
    }
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("uniform01 stays in [0, 1)") {
    Rng rng(0);
    double lo = 1, hi = 0, mean = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        double u = uniform01(rng);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        mean += u / n;
    }
    CHECK(lo >= 0);
    CHECK(hi < 1);
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("to_string is stable") {
    ComplexMatrix m{{1, Complex(0, -1)}, {0, 0.5}};
    CHECK(to_string(m, 2) == to_string(m, 2));
    CHECK_FALSE(to_string(m).empty());
}
