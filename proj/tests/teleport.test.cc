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
#include <cmath>

#include "doctest.h"
#include "oracles.h"
#include "qtel/bell.h"
#include "qtel/channel.h"
#include "qtel/errors.h"
#include "qtel/pauli.h"
#include "qtel/random.h"
#include "qtel/teleport.h"

using namespace qtel;

namespace {

std::vector<oracle::C> amps(const StateVector &s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

Channel random_perfect_channel(std::size_t n, Rng &rng) {
    return channel_from_matrix(scale(random_unitary(std::size_t{1} << n, rng), std::pow(2.0, -0.5 * double(n))));
}

Channel schmidt_channel(double lambda) {
    return channel_from_state(StateVector({std::sqrt(lambda), 0, 0, std::sqrt(1 - lambda)}), 1);
}

}  // namespace

TEST_CASE("composite expansion matches brute-force projection") {
    Rng rng(4);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (int t = 0; t < 5; ++t) {
            auto info = random_state(n, rng);
            auto ch = channel_from_state(random_state(2 * n, rng), n);
            auto basis = BellBasis::standard(n);
            auto recs = composite_expand(info, ch, basis);
            REQUIRE(recs.size() == basis.size());
            double total = 0;
            for (const auto &rec : recs) {
                auto bob = oracle::project_onto(amps(info), amps(ch.state()), amps(basis.member_state(rec.alpha)));
                double p = 0;
                for (auto c : bob) p += std::norm(c);
                CHECK(rec.probability == doctest::Approx(p).epsilon(1e-12));
                CHECK(rec.correction == CorrectionKind::None);
                REQUIRE(rec.bob_state);
                CHECK(oracle::fidelity(bob, amps(*rec.bob_state)) == doctest::Approx(1.0));
                total += rec.probability;
            }
            CHECK(total == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("transformation operator maps info amplitudes to Bob's amplitudes") {
    Rng rng(6);
    auto ch = channel_from_state(random_state(4, rng), 2);
    auto basis = BellBasis::standard(2);
    auto info = random_state(2, rng);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        auto op = transformation_operator(ch, basis, a);
        auto mine = matvec(op.matrix, info.amplitudes());
        auto bob = oracle::project_onto(amps(info), amps(ch.state()), amps(basis.member_state(a)));
        CHECK(max_abs_diff(std::span<const Complex>(mine), std::span<const Complex>(bob)) < 1e-14);
    }
}

TEST_CASE("Bell-pair channels teleport perfectly") {
    Rng rng(1);
    for (std::size_t n = 1; n <= 3; ++n) {
        auto ch = bell_pairs_channel(n);
        auto basis = BellBasis::standard(n);
        double p = std::pow(2.0, -2.0 * double(n));
        for (int t = 0; t < 5; ++t) {
            auto info = random_state(n, rng);
            for (const auto &rec : run_protocol(info, ch, basis)) {
                CHECK(rec.correction == CorrectionKind::Synthesized);
                CHECK(std::abs(rec.probability - p) < 1e-12);
                REQUIRE(rec.fidelity);
                CHECK(std::abs(*rec.fidelity - 1) < 1e-9);
            }
        }
    }
}

TEST_CASE("synthesized correction is the scaled inverse of the transformation operator") {
    Rng rng(9);
    for (std::size_t n = 1; n <= 2; ++n) {
        double d = double(std::size_t{1} << n);
        auto ch = random_perfect_channel(n, rng);
        auto basis = BellBasis::generate_from_seed(matrix_to_state(scale(random_unitary(std::size_t(d), rng),
                                                                         1 / std::sqrt(d))));
        for (std::size_t a = 0; a < basis.size(); ++a) {
            auto u = correction_unitary(ch, basis, a);
            CHECK(is_unitary(u, Tolerance(1e-12)).ok);
            auto direct = scale(matmul(basis.member(a), conjugate(ch.e_matrix())), d);
            CHECK(max_abs_diff(u, direct) < 1e-14);
            auto op = transformation_operator(ch, basis, a);
            CHECK(op.unitary_scaled);
            CHECK(op.scale == doctest::Approx(1 / (d * d)));
            // U = 2^-n O^-1, i.e. U O = 2^-n 1.
            CHECK(max_abs_diff(inverse(scale(op.matrix, d)), u) < 1e-12);
            CHECK(is_scaled_identity(matmul(u, op.matrix), 1 / d, Tolerance(1e-12)).ok);
        }
    }
}

TEST_CASE("imperfect channels refuse synthesis and fall back") {
    auto ch = schmidt_channel(0.8);
    auto basis = BellBasis::standard(1);
    CHECK_THROWS_AS(correction_unitary(ch, basis, 0), PreconditionError);
    auto recs = run_protocol(StateVector({std::sqrt(0.5), std::sqrt(0.5)}), ch, basis);
    double worst = 1;
    for (const auto &rec : recs) {
        CHECK(rec.correction != CorrectionKind::Synthesized);
        worst = std::min(worst, rec.fidelity.value_or(1.0));
    }
    CHECK(worst < 0.999);
    // O = E^T B^dagger is scaled-unitary only when E is, so no inverse exists to fall back on.
    for (const auto &rec : recs) CHECK(rec.correction == CorrectionKind::Identity);
}

TEST_CASE("zero-probability outcomes carry no state") {
    // Product channel |00>: Alice's projection onto some Bell members vanishes.
    auto ch = channel_from_state(StateVector::basis(2, 0), 1);
    auto recs = run_protocol(StateVector::basis(1, 0), ch, BellBasis::standard(1));
    std::size_t zeros = 0;
    for (const auto &rec : recs) {
        if (rec.zero_probability) {
            ++zeros;
            CHECK_FALSE(rec.bob_state);
            CHECK_FALSE(rec.fidelity);
        }
    }
    CHECK(zeros == 2);
}

TEST_CASE("supplied corrections are validated and applied") {
    auto ch = bell_pairs_channel(1);
    auto basis = BellBasis::standard(1);
    std::vector<ComplexMatrix> paulis;
    for (std::size_t a = 0; a < 4; ++a) paulis.push_back(matrix_of(pauli_from_quaternary(a, 1)));
    Rng rng(12);
    auto info = random_state(1, rng);
    for (const auto &rec : run_protocol(info, ch, basis, paulis)) {
        CHECK(rec.correction == CorrectionKind::Supplied);
        CHECK(*rec.fidelity == doctest::Approx(1.0));
    }
    auto bad = paulis;
    bad[2] = scale(bad[2], 2.0);
    CHECK_THROWS_AS(run_protocol(info, ch, basis, bad), ValidationError);
    bad.pop_back();
    CHECK_THROWS_AS(run_protocol(info, ch, basis, bad), ShapeError);
}

TEST_CASE("run_protocol rejects mismatched or unnormalized input") {
    auto ch = bell_pairs_channel(1);
    CHECK_THROWS_AS(run_protocol(StateVector::basis(2, 0), ch, BellBasis::standard(1)), ShapeError);
    CHECK_THROWS_AS(run_protocol(StateVector({1.0, 1.0}), ch, BellBasis::standard(1)), ValidationError);
    CHECK_THROWS_AS(run_protocol(StateVector::basis(1, 0), ch, BellBasis::standard(1), ProtocolMode::sampled(1, 0)),
                    DomainError);
}

TEST_CASE("sampled mode is deterministic and matches the exhaustive distribution") {
    Rng rng(30);
    auto info = random_state(1, rng);
    auto ch = schmidt_channel(0.85);
    auto basis = BellBasis::standard(1);
    auto table = run_protocol(info, ch, basis);
    const std::size_t shots = 20000;
    auto a = run_protocol(info, ch, basis, ProtocolMode::sampled(77, shots));
    auto b = run_protocol(info, ch, basis, ProtocolMode::sampled(77, shots));
    REQUIRE(a.size() == shots);
    std::vector<double> freq(table.size());
    for (std::size_t s = 0; s < shots; ++s) {
        CHECK(a[s].alpha == b[s].alpha);
        freq[a[s].alpha] += 1.0 / shots;
    }
    // Kolmogorov-Smirnov distance of the empirical CDF; 1.63/sqrt(N) is the 1% critical value.
    double cdf_e = 0, cdf_p = 0, ks = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
        cdf_e += freq[k];
        cdf_p += table[k].probability;
        ks = std::max(ks, std::abs(cdf_e - cdf_p));
    }
    CHECK(ks < 1.63 / std::sqrt(double(shots)));
}

TEST_CASE("kernel operator is the alpha = 0 correction for perfect channels") {
    auto ch = bell_pairs_channel(2);
    auto basis = BellBasis::standard(2);
    auto k = kernel_operator(ch, basis);
    CHECK(k.is_correction);
    CHECK(k.unitary_scaled);
    CHECK(max_abs_diff(k.matrix, correction_unitary(ch, basis, 0)) < 1e-15);
    auto imperfect = kernel_operator(schmidt_channel(0.9), BellBasis::standard(1));
    CHECK_FALSE(imperfect.is_correction);
    CHECK_FALSE(imperfect.unitary_scaled);
}

TEST_CASE("MASFI equals 2C/(1+C) for Schmidt channels") {
    for (double lambda : {0.5, 0.55, 0.7, 0.95}) {
        auto ch = schmidt_channel(lambda);
        double c = concurrence_2q(ch.state());
        auto r = masfi_1q(ch);
        CAPTURE(lambda);
        CHECK(r.converged);
        CHECK_FALSE(r.degenerate);
        CHECK(std::abs(r.value - 2 * c / (1 + c)) < 1e-3);
        CHECK(r.value <= r.grid_value + 1e-12);
        CHECK(worst_outcome_fidelity_1q(ch, r.theta, r.phi) == doctest::Approx(r.value));
    }
}

TEST_CASE("MASFI is a lower bound over information states") {
    auto ch = schmidt_channel(0.75);
    auto r = masfi_1q(ch);
    Rng rng(44);
    for (int t = 0; t < 200; ++t) {
        double theta = std::acos(1 - 2 * uniform01(rng));
        double phi = 2 * M_PI * uniform01(rng);
        CHECK(worst_outcome_fidelity_1q(ch, theta, phi) >= r.value - 1e-6);
    }
}

TEST_CASE("MASFI of a product channel is degenerate") {
    auto r = masfi_1q(channel_from_state(StateVector::basis(2, 0), 1));
    CHECK(r.degenerate);
    CHECK(r.value == 0);
    CHECK_THROWS_AS(masfi_1q(bell_pairs_channel(2)), ShapeError);
}
