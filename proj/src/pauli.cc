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

#include "qtel/pauli.h"

#include <array>
#include <bit>

#include "qtel/errors.h"

namespace qtel {

namespace {

constexpr std::array<Complex, 4> kIPowers = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};

int mod4(int v) { return ((v % 4) + 4) % 4; }

std::uint64_t mask_for(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Exponent g with P1 P2 = i^g (P1 xor P2) for single-qubit factors, Y hermitian.
int product_phase(bool x1, bool z1, bool x2, bool z2) {
    if (x1 && z1) {
        return int(z2) - int(x2);
    }
    if (x1) {
        return int(z2) * (2 * int(x2) - 1);
    }
    if (z1) {
        return int(x2) * (1 - 2 * int(z2));
    }
    return 0;
}

ComplexMatrix factor_matrix(char f) {
    switch (f) {
        case 'X':
            return {{0, 1}, {1, 0}};
        case 'Y':
            return {{0, Complex{0, -1}}, {Complex{0, 1}, 0}};
        case 'Z':
            return {{1, 0}, {0, -1}};
        default:
            return ComplexMatrix::identity(2);
    }
}

void require_same_size(const PauliString &p, const PauliString &q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw ShapeError("Pauli strings on " + std::to_string(p.n_qubits()) + " and " +
                         std::to_string(q.n_qubits()) + " qubits");
    }
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

QuaternaryIndex::QuaternaryIndex(std::uint64_t alpha, std::size_t n) : alpha_(alpha), n_(n) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw DomainError("quaternary index needs 1 <= n <= " + std::to_string(kMaxPauliQubits));
    }
    if (alpha >> (2 * n) != 0) {
        throw DomainError("index " + std::to_string(alpha) + " out of range for n = " + std::to_string(n));
    }
}

QuaternaryIndex QuaternaryIndex::from_digits(const std::vector<int> &digits) {
    std::uint64_t alpha = 0;
    for (int d : digits) {
        if (d < 0 || d > 3) {
            throw DomainError("quaternary digit " + std::to_string(d) + " not in 0..3");
        }
        alpha = alpha * 4 + static_cast<std::uint64_t>(d);
    }
    return {alpha, digits.size()};
}

std::vector<int> QuaternaryIndex::digits() const {
    std::vector<int> out(n_);
    std::uint64_t a = alpha_;
    for (std::size_t j = n_; j-- > 0;) {
        out[j] = static_cast<int>(a % 4);
        a /= 4;
    }
    return out;
}

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits, int phase_power)
    : n_(n_qubits), x_(x_bits), z_(z_bits), phase_(mod4(phase_power)) {
    if (n_ == 0 || n_ > kMaxPauliQubits) {
        throw DomainError("Pauli string needs 1 <= n <= " + std::to_string(kMaxPauliQubits));
    }
    if ((x_ | z_) & ~mask_for(n_)) {
        throw DomainError("Pauli bitmask does not fit in " + std::to_string(n_) + " qubits");
    }
}

PauliString PauliString::identity(std::size_t n_qubits) { return {n_qubits, 0, 0, 0}; }

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    if (starts_with(text, "+")) {
        text.remove_prefix(1);
    } else if (starts_with(text, "-")) {
        phase = 2;
        text.remove_prefix(1);
    }
    if (starts_with(text, "i")) {
        phase += 1;
        text.remove_prefix(1);
        if (starts_with(text, "·")) {
            text.remove_prefix(std::string_view("·").size());
        } else if (starts_with(text, "*")) {
            text.remove_prefix(1);
        }
    }
    std::string letters;
    while (!text.empty()) {
        if (starts_with(text, "⊗")) {
            text.remove_prefix(std::string_view("⊗").size());
            continue;
        }
        char c = text.front();
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ValidationError("unexpected character '" + std::string(1, c) + "' in Pauli string");
        }
        letters.push_back(c);
        text.remove_prefix(1);
    }
    if (letters.empty()) {
        throw ValidationError("empty Pauli string");
    }
    std::size_t n = letters.size();
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - r);
        if (letters[r] == 'X' || letters[r] == 'Y') {
            x |= bit;
        }
        if (letters[r] == 'Z' || letters[r] == 'Y') {
            z |= bit;
        }
    }
    return {n, x, z, phase};
}

char PauliString::factor(std::size_t r) const {
    if (r == 0 || r > n_) {
        throw DomainError("qubit index out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << (n_ - r);
    bool x = x_ & bit;
    bool z = z_ & bit;
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::uint64_t PauliString::quaternary_alpha() const {
    std::uint64_t alpha = 0;
    for (std::size_t r = 1; r <= n_; ++r) {
        int digit = 0;
        switch (factor(r)) {
            case 'Z':
                digit = 1;
                break;
            case 'X':
                digit = 2;
                break;
            case 'Y':
                digit = 3;
                break;
            default:
                break;
        }
        alpha = alpha * 4 + static_cast<std::uint64_t>(digit);
    }
    return alpha;
}

std::string PauliString::str(bool tensor_glyph) const {
    static constexpr std::array<const char *, 4> kPrefix = {"", "i·", "-", "-i·"};
    std::string out = kPrefix[static_cast<std::size_t>(phase_)];
    for (std::size_t r = 1; r <= n_; ++r) {
        if (tensor_glyph && r > 1) {
            out += "⊗";
        }
        out.push_back(factor(r));
    }
    return out;
}

PauliString pauli_from_quaternary(const QuaternaryIndex &alpha, std::size_t n) {
    if (alpha.n() != n) {
        throw DomainError("quaternary index built for a different qubit count");
    }
    auto digits = alpha.digits();
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - r);
        int d = digits[r];
        if (d == 2 || d == 3) {
            x |= bit;
        }
        if (d == 1 || d == 3) {
            z |= bit;
        }
    }
    return {n, x, z, 0};
}

PauliString pauli_from_quaternary(std::uint64_t alpha, std::size_t n) {
    return pauli_from_quaternary(QuaternaryIndex(alpha, n), n);
}

PauliString product(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    int phase = p.phase_power() + q.phase_power();
    for (std::size_t b = 0; b < p.n_qubits(); ++b) {
        std::uint64_t bit = std::uint64_t{1} << b;
        phase += product_phase(p.x_bits() & bit, p.z_bits() & bit, q.x_bits() & bit, q.z_bits() & bit);
    }
    return {p.n_qubits(), p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(), phase};
}

bool commutes(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    std::uint64_t sym = (p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits());
    return std::popcount(sym) % 2 == 0;
}

ComplexMatrix matrix_of(const PauliString &p) {
    ComplexMatrix m = factor_matrix(p.factor(1));
    for (std::size_t r = 2; r <= p.n_qubits(); ++r) {
        m = kron(m, factor_matrix(p.factor(r)));
    }
    return scale(m, kIPowers[static_cast<std::size_t>(p.phase_power())]);
}

bool FamilyPropertyReport::all_passed() const {
    for (const auto &p : properties) {
        if (!p.passed) {
            return false;
        }
    }
    return true;
}

FamilyPropertyReport family_property_report(std::size_t n) {
    if (n == 0) {
        throw DomainError("family_property_report needs n >= 1");
    }
    if (n > kMaxExhaustiveQubits) {
        throw ResourceError("exhaustive property report capped at n = " + std::to_string(kMaxExhaustiveQubits));
    }
    const std::size_t count = std::size_t{1} << (2 * n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<PauliString> strings;
    std::vector<ComplexMatrix> mats;
    for (std::size_t a = 0; a < count; ++a) {
        strings.push_back(pauli_from_quaternary(a, n));
        mats.push_back(matrix_of(strings.back()));
    }
    const ComplexMatrix id = ComplexMatrix::identity(dim);

    FamilyPropertyReport report;
    report.n = n;
    auto fail = [](PropertyCheck &c, std::string why) {
        if (c.passed) {
            c.passed = false;
            c.counterexample = std::move(why);
        }
    };

    PropertyCheck squares{"square of every element is the identity", true, {}};
    PropertyCheck hermitian{"every element is hermitian", true, {}};
    PropertyCheck traceless{"trace is zero for every non-identity element", true, {}};
    for (std::size_t a = 0; a < count; ++a) {
        if (matmul(mats[a], mats[a]) != id) {
            fail(squares, strings[a].str());
        }
        if (dagger(mats[a]) != mats[a]) {
            fail(hermitian, strings[a].str());
        }
        if (a != 0 && trace(mats[a]) != Complex{}) {
            fail(traceless, strings[a].str());
        }
    }

    PropertyCheck closure{"product of two elements is +-1 or +-i times an element", true, {}};
    PropertyCheck dichotomy{"any two elements commute or anticommute", true, {}};
    PropertyCheck partner{"every non-identity element has an anticommuting partner", true, {}};
    report.anticommuting_partners.assign(count, 0);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            ComplexMatrix ab = matmul(mats[a], mats[b]);
            ComplexMatrix ba = matmul(mats[b], mats[a]);
            PauliString r = product(strings[a], strings[b]);
            ComplexMatrix expected = scale(mats[r.without_phase().quaternary_alpha()],
                                           kIPowers[static_cast<std::size_t>(r.phase_power())]);
            if (ab != expected) {
                fail(closure, strings[a].str() + " * " + strings[b].str());
            }
            bool dense_commute = ab == ba;
            bool dense_anti = ab == scale(ba, -1.0);
            if (!(dense_commute || dense_anti) || dense_commute != commutes(strings[a], strings[b])) {
                fail(dichotomy, strings[a].str() + ", " + strings[b].str());
            }
            if (dense_anti) {
                ++report.anticommuting_partners[a];
            }
        }
        if (a != 0 && report.anticommuting_partners[a] == 0) {
            fail(partner, strings[a].str());
        }
    }

    // Gram matrix Tr(m_a^dagger m_b) and the vectorization of the family.
    ComplexMatrix gram(count, count);
    ComplexMatrix vectorized(count, dim * dim);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            gram(a, b) = frobenius_inner(mats[a], mats[b]);
        }
        auto e = mats[a].entries();
        for (std::size_t k = 0; k < e.size(); ++k) {
            vectorized(a, k) = e[k];
        }
    }
    PropertyCheck independent{"elements are linearly independent (Gram matrix nonsingular)", true, {}};
    std::size_t gram_rank = rank(gram);
    if (gram_rank != count) {
        fail(independent, "Gram rank " + std::to_string(gram_rank) + " < " + std::to_string(count));
    }
    PropertyCheck spanning{"elements span all 2^n x 2^n matrices", true, {}};
    std::size_t span_dim = rank(vectorized);
    if (span_dim != dim * dim) {
        fail(spanning, "span dimension " + std::to_string(span_dim) + " < " + std::to_string(dim * dim));
    }

    report.properties = {squares, hermitian, closure, dichotomy, partner, traceless, independent, spanning};

    report.all_nonidentity_mutually_anticommute = true;
    for (std::size_t a = 1; a < count && report.all_nonidentity_mutually_anticommute; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            if (commutes(strings[a], strings[b])) {
                report.all_nonidentity_mutually_anticommute = false;
                break;
            }
        }
    }
    return report;
}

}  // namespace qtel
