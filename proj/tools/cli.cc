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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qtel/bell.h"
#include "qtel/channel.h"
#include "qtel/errors.h"
#include "qtel/json_io.h"
#include "qtel/magic.h"
#include "qtel/pauli.h"
#include "qtel/teleport.h"

namespace qtel::cli {

namespace {

constexpr const char *kSchema = "qtel/1";

/// Bad flags or unusable input; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::optional<double> tol;

    std::string file;
    std::string info_file;
    std::string channel_file;
    std::string basis_file;
    std::string seed_file;
    std::size_t n = 0;
    std::string mode = "exhaustive";
    std::size_t shots = 10000;
    std::uint64_t seed = 0;
    bool assert_perfect = false;

    std::string set;
    std::size_t trials = 100;
    std::string phases = "common";
    std::optional<double> lambda;
};

bool json_output(const Options &o) { return o.format == "json"; }

Tolerance resolve_tolerance(const Options &o) {
    try {
        if (o.tol) {
            return Tolerance(*o.tol);
        }
        if (const char *env = std::getenv("QTEL_TOL"); env != nullptr && *env != '\0') {
            std::size_t used = 0;
            double v = std::stod(env, &used);
            if (used != std::string(env).size()) {
                throw DomainError("trailing characters");
            }
            return Tolerance(v);
        }
    } catch (const std::exception &) {
        throw UsageError("tolerance must be a positive number (check --tol / QTEL_TOL)");
    }
    return Tolerance{};
}

Json header(const char *command) { return Json{{"schema", kSchema}, {"command", command}}; }

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << '\n'; }

std::string fixed(double v, int precision = 9) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(precision) << v;
    return s.str();
}

Json amplitudes_json(const StateVector &s) {
    Json a = Json::array();
    for (Complex c : s.amplitudes()) {
        a.push_back(to_json(c));
    }
    return a;
}

StateVector load_state(const std::string &path) {
    try {
        return read_state_file(path);
    } catch (const ParseError &e) {
        throw UsageError(e.what());
    }
}

Channel load_channel(const std::string &path, Tolerance tol) {
    StateVector s = load_state(path);
    if (s.n_qubits() % 2 != 0) {
        throw UsageError(path + ": channel state needs an even qubit count, got " + std::to_string(s.n_qubits()));
    }
    try {
        return Channel(s, s.n_qubits() / 2, tol);
    } catch (const ValidationError &e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string pauli_label(std::size_t alpha, std::size_t n) { return pauli_from_quaternary(alpha, n).str(); }

// ---------------------------------------------------------------- channel

int channel_check(const Options &o, std::ostream &out) {
    Tolerance tol = resolve_tolerance(o);
    Channel ch = load_channel(o.file, tol);
    auto perfect = is_perfect(ch, tol);
    auto character = is_unitary(character_matrix(ch), tol);
    if (json_output(o)) {
        Json j = header("channel check");
        j["file"] = o.file;
        j["n"] = ch.n();
        j["tolerance"] = tol.abs_eps();
        j["perfect"] = perfect.ok;
        j["deviation"] = perfect.max_deviation;
        j["character_matrix_unitary"] = character.ok;
        j["e_matrix"] = to_json(ch.e_matrix());
        if (ch.n() == 1) {
            j["concurrence"] = concurrence_2q(ch.state());
        }
        emit(out, j);
    } else {
        out << "channel: n = " << ch.n() << " (" << 2 * ch.n() << " qubits)\n";
        out << "E^dagger E vs 2^-" << ch.n() << " 1: max deviation " << perfect.max_deviation << " -> "
            << (perfect.ok ? "perfect" : "NOT perfect") << "\n";
        out << "character matrix 2^(n/2) E unitary: " << (character.ok ? "yes" : "no") << "\n";
        if (ch.n() == 1) {
            out << "concurrence: " << fixed(concurrence_2q(ch.state())) << "\n";
        }
    }
    return perfect.ok ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------- bell

int bell_gen(const Options &o, std::ostream &out) {
    Tolerance tol = resolve_tolerance(o);
    if (o.n == 0) {
        throw UsageError("--n must be >= 1");
    }
    BellBasis basis = [&] {
        if (o.seed_file.empty()) {
            return BellBasis::standard(o.n);
        }
        StateVector seed = load_state(o.seed_file);
        if (seed.n_qubits() != 2 * o.n) {
            throw UsageError(o.seed_file + ": seed has " + std::to_string(seed.n_qubits()) + " qubits, --n " +
                             std::to_string(o.n) + " needs " + std::to_string(2 * o.n));
        }
        if (!seed.is_normalized(tol)) {
            throw UsageError(o.seed_file + ": seed state is not normalized");
        }
        return BellBasis::generate_from_seed(seed, tol);
    }();
    auto completeness = verify_completeness(basis, tol);
    auto ortho = verify_orthonormality(basis, tol);
    if (json_output(o)) {
        Json j = header("bell gen");
        j["n"] = basis.n();
        j["completeness_deviation"] = completeness.max_deviation;
        j["orthonormality_deviation"] = ortho.max_deviation;
        Json labels = Json::array();
        for (std::size_t a = 0; a < basis.size(); ++a) {
            labels.push_back(pauli_label(a, basis.n()));
        }
        j["generators"] = std::move(labels);
        j["members"] = to_json(basis);
        emit(out, j);
    } else {
        out << "Bell basis: n = " << basis.n() << ", " << basis.size() << " members\n";
        out << "completeness deviation " << completeness.max_deviation << ", orthonormality deviation "
            << ortho.max_deviation << "\n";
        for (std::size_t a = 0; a < basis.size(); ++a) {
            out << "B(" << a << ") = " << pauli_label(a, basis.n()) << " |B(0)>\n"
                << to_string(basis.member(a)) << "\n";
        }
    }
    return completeness.ok && ortho.ok ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------- teleport

int teleport_run(const Options &o, std::ostream &out) {
    Tolerance tol = resolve_tolerance(o);
    StateVector info = load_state(o.info_file);
    Channel ch = load_channel(o.channel_file, tol);
    if (o.n != 0 && o.n != ch.n()) {
        throw UsageError("--n " + std::to_string(o.n) + " does not match the channel (n = " + std::to_string(ch.n()) +
                         ")");
    }
    if (info.n_qubits() != ch.n()) {
        throw UsageError(o.info_file + ": information state has " + std::to_string(info.n_qubits()) +
                         " qubits, channel needs " + std::to_string(ch.n()));
    }
    if (!info.is_normalized(tol)) {
        throw UsageError(o.info_file + ": information state is not normalized");
    }
    BellBasis basis = [&] {
        if (o.basis_file.empty()) {
            return BellBasis::standard(ch.n());
        }
        try {
            return read_basis_file(o.basis_file, tol);
        } catch (const ParseError &e) {
            throw UsageError(e.what());
        }
    }();
    if (basis.n() != ch.n()) {
        throw UsageError(o.basis_file + ": basis is for n = " + std::to_string(basis.n()));
    }

    const bool sampled = o.mode == "sampled";
    if (sampled && o.shots == 0) {
        throw UsageError("--shots must be >= 1");
    }
    auto table = run_protocol(info, ch, basis, ProtocolMode::exhaustive(), tol);
    std::vector<std::size_t> counts(table.size());
    double sampled_mean_fidelity = 0;
    if (sampled) {
        for (const auto &rec : run_protocol(info, ch, basis, ProtocolMode::sampled(o.seed, o.shots), tol)) {
            ++counts[rec.alpha];
            sampled_mean_fidelity += rec.fidelity.value_or(0.0);
        }
        sampled_mean_fidelity /= double(o.shots);
    }

    double total_probability = 0;
    double min_fidelity = 1;
    double mean_fidelity = 0;
    for (const auto &rec : table) {
        total_probability += rec.probability;
        if (rec.fidelity) {
            min_fidelity = std::min(min_fidelity, *rec.fidelity);
            mean_fidelity += rec.probability * *rec.fidelity;
        }
    }
    const bool all_perfect = min_fidelity >= 1 - tol.abs_eps();
    auto perfect = is_perfect(ch, tol);

    if (json_output(o)) {
        Json j = header("teleport run");
        j["n"] = ch.n();
        j["mode"] = sampled ? "sampled" : "exhaustive";
        j["tolerance"] = tol.abs_eps();
        j["channel_perfect"] = perfect.ok;
        j["channel_deviation"] = perfect.max_deviation;
        Json rows = Json::array();
        for (const auto &rec : table) {
            Json r{{"alpha", rec.alpha},
                   {"generator", pauli_label(rec.alpha, ch.n())},
                   {"probability", rec.probability},
                   {"zero_probability", rec.zero_probability},
                   {"correction", std::string(to_string(rec.correction))}};
            r["fidelity"] = rec.fidelity ? Json(*rec.fidelity) : Json(nullptr);
            r["bob_state"] = rec.bob_state ? amplitudes_json(*rec.bob_state) : Json(nullptr);
            r["corrected_state"] = rec.corrected_state ? amplitudes_json(*rec.corrected_state) : Json(nullptr);
            if (sampled) {
                r["count"] = counts[rec.alpha];
            }
            rows.push_back(std::move(r));
        }
        j["outcomes"] = std::move(rows);
        Json summary{{"total_probability", total_probability},
                     {"min_fidelity", min_fidelity},
                     {"mean_fidelity", mean_fidelity},
                     {"all_perfect", all_perfect}};
        if (sampled) {
            summary["shots"] = o.shots;
            summary["seed"] = o.seed;
            summary["sampled_mean_fidelity"] = sampled_mean_fidelity;
        }
        j["summary"] = std::move(summary);
        emit(out, j);
    } else {
        out << "teleport: n = " << ch.n() << ", channel " << (perfect.ok ? "perfect" : "NOT perfect")
            << " (deviation " << perfect.max_deviation << ")\n";
        out << std::setw(6) << "alpha" << std::setw(8) << "gen" << std::setw(14) << "probability" << std::setw(14)
            << "fidelity" << "  correction" << (sampled ? "  count" : "") << "\n";
        for (const auto &rec : table) {
            out << std::setw(6) << rec.alpha << std::setw(8) << pauli_label(rec.alpha, ch.n()) << std::setw(14)
                << fixed(rec.probability) << std::setw(14) << (rec.fidelity ? fixed(*rec.fidelity) : "-") << "  "
                << to_string(rec.correction);
            if (sampled) {
                out << "  " << counts[rec.alpha];
            }
            out << "\n";
        }
        out << "total probability " << fixed(total_probability) << ", min fidelity " << fixed(min_fidelity)
            << ", mean fidelity " << fixed(mean_fidelity) << "\n";
        if (sampled) {
            out << o.shots << " shots (seed " << o.seed << "), sampled mean fidelity " << fixed(sampled_mean_fidelity)
                << "\n";
        }
    }
    if (o.assert_perfect && !all_perfect) {
        return kExitAssertion;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- magic

std::string clique_text(const AnticommGraph &g, const std::vector<std::size_t> &c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        s += (i ? ", " : "") + g.vertices[c[i]].str();
        if (g.n == 2) {
            s += "(" + n2_name(g.vertices[c[i]]) + ")";
        }
    }
    return s + "}";
}

int magic_cliques(const Options &o, std::ostream &out) {
    if (o.n == 0 || o.n > kMaxExhaustiveQubits) {
        throw UsageError("--n must be 1, 2 or 3");
    }
    AnticommGraph g = build_anticomm_graph(o.n);
    CliqueReport r = maximal_anticommuting_sets(g);
    if (json_output(o)) {
        Json j = header("magic cliques");
        j["n"] = o.n;
        j["vertices"] = g.size();
        j["degree"] = g.degree(0);
        j["max_size"] = r.max_size;
        j["max_partial_basis_dimension"] = r.max_size + 1;
        j["maximal_clique_count"] = r.maximal_cliques.size();
        Json cl = Json::array();
        for (const auto &c : r.maximal_cliques) {
            Json members = Json::array();
            for (std::size_t v : c) {
                members.push_back(g.vertices[v].str());
            }
            cl.push_back(std::move(members));
        }
        j["maximal_cliques"] = std::move(cl);
        emit(out, j);
    } else {
        out << "anticommutation graph: n = " << o.n << ", " << g.size() << " vertices, degree " << g.degree(0)
            << "\n";
        out << r.maximal_cliques.size() << " maximal cliques, max size " << r.max_size
            << " (partial bases up to dimension " << r.max_size + 1 << ")\n";
        for (const auto &c : r.maximal_cliques) {
            out << "  " << clique_text(g, c) << "\n";
        }
    }
    return kExitOk;
}

Json names_json(const std::vector<std::string> &names) { return Json(names); }

int magic_catalog(const Options &o, std::ostream &out) {
    N2Catalog cat = n2_catalog();
    if (json_output(o)) {
        Json j = header("magic catalog");
        Json entries = Json::array();
        for (const auto &e : cat.entries) {
            entries.push_back({{"name", e.name},
                               {"pauli", e.pauli.str()},
                               {"matches", e.matches},
                               {"deviation", e.deviation},
                               {"printed", amplitudes_json(e.printed)},
                               {"constructed", amplitudes_json(e.constructed)}});
        }
        j["states"] = std::move(entries);
        j["max_clique"] = cat.cliques.max_size;
        j["maximal_clique_count"] = cat.cliques.maximal_cliques.size();
        Json largest = Json::array();
        for (const auto &b : cat.largest_partial_bases) {
            largest.push_back(names_json(b));
        }
        j["largest_partial_bases"] = std::move(largest);
        Json rec = Json::array();
        for (const auto &r : cat.reconciliation) {
            rec.push_back({{"label", r.label},
                           {"printed", r.printed},
                           {"nearest_clique", names_json(r.nearest_clique)},
                           {"overlap", r.overlap},
                           {"exact_match", r.exact_match},
                           {"flagged", r.flagged()},
                           {"issues", names_json(r.issues)}});
        }
        j["reconciliation"] = std::move(rec);
        Json family = Json::array();
        for (const auto &f : cat.quarter.disjoint_family) {
            family.push_back(names_json(f));
        }
        j["quarter_bases"] = {{"anticommuting_triples", cat.quarter.anticommuting_triples},
                              {"closed_triples", cat.quarter.closed_triples},
                              {"max_disjoint_family", cat.quarter.max_disjoint_family},
                              {"disjoint_family", std::move(family)},
                              {"printed_list_issues", names_json(cat.quarter.printed_list_issues)}};
        j["typos"] = names_json(cat.typos);
        emit(out, j);
    } else {
        out << "N = 2 states (printed vs (1/2) matrix of the Pauli string):\n";
        for (const auto &e : cat.entries) {
            out << "  " << std::left << std::setw(3) << e.name << std::right << " = (1/2) " << e.pauli.str(true)
                << (e.matches ? "  ok" : "  MISMATCH") << "\n";
        }
        out << "maximal anticommuting sets: " << cat.cliques.maximal_cliques.size() << ", max size "
            << cat.cliques.max_size << "\n";
        out << "largest partial bases (dimension " << cat.cliques.max_size + 1 << "), identity plus:\n";
        for (const auto &b : cat.largest_partial_bases) {
            out << "  {";
            for (std::size_t i = 0; i < b.size(); ++i) {
                out << (i ? ", " : "") << b[i];
            }
            out << "}\n";
        }
        out << "quarter bases: " << cat.quarter.anticommuting_triples << " anticommuting triples ("
            << cat.quarter.closed_triples << " closed), at most " << cat.quarter.max_disjoint_family
            << " pairwise sharing only |I>\n";
        out << "reconciliation with the printed lists:\n";
        for (const auto &r : cat.reconciliation) {
            out << "  " << std::left << std::setw(8) << r.label << std::right << " " << r.printed << " -> "
                << (r.flagged() ? "FLAGGED" : "ok") << "\n";
        }
        out << "typos:\n";
        for (const auto &t : cat.typos) {
            out << "  - " << t << "\n";
        }
    }
    return kExitOk;
}

std::vector<PauliString> parse_set(const Options &o) {
    std::vector<PauliString> set;
    std::stringstream in(o.set);
    for (std::string tok; std::getline(in, tok, ',');) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                  tok.end());
        if (tok.empty()) {
            continue;
        }
        if (std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
            if (o.n == 0) {
                throw UsageError("quaternary indices in --set need --n");
            }
            try {
                set.push_back(pauli_from_quaternary(std::stoull(tok), o.n));
            } catch (const DomainError &e) {
                throw UsageError(std::string("--set: ") + e.what());
            }
            continue;
        }
        if (auto named = n2_from_name(tok)) {
            set.push_back(*named);
            continue;
        }
        try {
            set.push_back(PauliString::parse(tok));
        } catch (const std::exception &) {
            throw UsageError("--set: cannot read '" + tok + "' as an index, a letter name or a Pauli string");
        }
    }
    if (set.empty()) {
        throw UsageError("--set is empty");
    }
    return set;
}

int magic_verify(const Options &o, std::ostream &out, std::ostream &err) {
    Tolerance tol = resolve_tolerance(o);
    if (o.trials == 0) {
        throw UsageError("--trials must be >= 1");
    }
    if (o.phases != "common" && o.phases != "independent") {
        throw UsageError("--phases must be common or independent");
    }
    std::vector<PauliString> set = parse_set(o);
    for (const auto &p : set) {
        if (p.n_qubits() != set.front().n_qubits()) {
            throw UsageError("--set mixes strings on different qubit counts");
        }
    }
    std::optional<MagicPartialBasis> built;
    try {
        built = partial_basis_from_set(set);
    } catch (const ValidationError &e) {
        err << "qtel: " << e.what() << "\n";
        return kExitAssertion;
    }
    const MagicPartialBasis &basis = *built;
    auto phases = o.phases == "common" ? CoefficientPhases::Common : CoefficientPhases::Independent;
    auto v = verify_partial_basis(basis, o.trials, o.seed, tol, phases);
    if (json_output(o)) {
        Json j = header("magic verify");
        j["n"] = basis.n();
        Json src = Json::array();
        for (const auto &p : basis.source_set()) {
            src.push_back(p.str());
        }
        j["set"] = std::move(src);
        j["dimension"] = basis.size();
        j["trials"] = v.trials;
        j["seed"] = o.seed;
        j["phases"] = o.phases;
        j["tolerance"] = tol.abs_eps();
        j["orthonormality_deviation"] = v.orthonormality_deviation;
        j["max_gram_deviation"] = v.max_gram_deviation;
        j["max_fidelity_defect"] = v.max_fidelity_defect;
        j["failures"] = v.failures;
        j["passed"] = v.passed();
        emit(out, j);
    } else {
        out << "partial basis of dimension " << basis.size() << " on n = " << basis.n() << ": identity";
        for (const auto &p : basis.source_set()) {
            out << ", i·" << p.str();
        }
        out << "\n" << v.trials << " trials (" << o.phases << " phase): max |M^dagger M - 2^-n 1| = "
            << v.max_gram_deviation << ", max fidelity defect " << v.max_fidelity_defect << ", failures "
            << v.failures << " -> " << (v.passed() ? "PASS" : "FAIL") << "\n";
    }
    if (!v.passed()) {
        err << "verification failed: max deviation " << v.max_gram_deviation << "\n";
    }
    return v.passed() ? kExitOk : kExitAssertion;
}

int magic_witness(const Options &o, std::ostream &out) {
    if (o.n == 0 || o.n > kMaxExhaustiveQubits) {
        throw UsageError("--n must be 1, 2 or 3");
    }
    WitnessReport w = no_full_magic_basis_witness(o.n);
    if (json_output(o)) {
        Json j = header("magic witness");
        j["n"] = w.n;
        j["vertex_count"] = w.vertex_count;
        j["maximal_clique_count"] = w.maximal_clique_count;
        j["max_clique"] = w.max_clique;
        j["required"] = w.required;
        j["obstruction"] = w.obstruction;
        j["holds"] = w.holds();
        if (w.ghz_perfect_deviation) {
            j["ghz_perfect_deviation"] = *w.ghz_perfect_deviation;
            Json exps = Json::array();
            for (const auto &e : w.ghz_expansions) {
                Json coeffs = Json::array();
                for (Complex c : e.coefficients) {
                    coeffs.push_back(to_json(c));
                }
                exps.push_back({{"basis", names_json(e.basis)},
                                {"coefficients", std::move(coeffs)},
                                {"residual_norm", e.residual_norm},
                                {"coefficients_share_phase", e.coefficients_share_phase}});
            }
            j["ghz_expansions"] = std::move(exps);
        }
        emit(out, j);
    } else {
        out << "n = " << w.n << ": exhaustive search over " << w.vertex_count << " non-identity strings, "
            << w.maximal_clique_count << " maximal anticommuting sets\n";
        if (w.obstruction) {
            out << "max clique " << w.max_clique << " < " << w.required << " -> no full magic basis\n";
        } else {
            out << "max clique " << w.max_clique << " = " << w.required << " -> no obstruction\n";
        }
        if (w.ghz_perfect_deviation) {
            out << "GHZ channel (|0000>+|1111>)/sqrt2: E^dagger E deviation " << *w.ghz_perfect_deviation << "\n";
            for (const auto &e : w.ghz_expansions) {
                out << "  over {";
                for (std::size_t i = 0; i < e.basis.size(); ++i) {
                    out << (i ? ", " : "") << e.basis[i];
                }
                out << "}: residual " << e.residual_norm << ", common phase "
                    << (e.coefficients_share_phase ? "yes" : "no") << "\n";
            }
        }
    }
    if (w.n == 1) {
        return kExitOk;
    }
    return w.holds() ? kExitOk : kExitAssertion;
}

// ---------------------------------------------------------------- masfi

int masfi(const Options &o, std::ostream &out) {
    Tolerance tol = resolve_tolerance(o);
    if (o.lambda.has_value() == !o.channel_file.empty()) {
        throw UsageError("give exactly one of --channel or --lambda");
    }
    Channel ch = [&] {
        if (o.lambda) {
            double l = *o.lambda;
            if (!(l >= 0 && l <= 1)) {
                throw UsageError("--lambda must lie in [0, 1]");
            }
            return channel_from_state(StateVector({std::sqrt(l), 0, 0, std::sqrt(1 - l)}), 1, tol);
        }
        return load_channel(o.channel_file, tol);
    }();
    if (ch.n() != 1) {
        throw UsageError("masfi needs a 2-qubit channel");
    }
    MasfiResult r = masfi_1q(ch);
    double c = concurrence_2q(ch.state());
    double formula = 2 * c / (1 + c);
    if (json_output(o)) {
        Json j = header("masfi");
        j["concurrence"] = c;
        j["masfi"] = r.value;
        j["formula"] = formula;
        j["difference"] = r.value - formula;
        j["degenerate"] = r.degenerate;
        j["converged"] = r.converged;
        j["grid_value"] = r.grid_value;
        j["theta"] = r.theta;
        j["phi"] = r.phi;
        j["evaluations"] = r.evaluations;
        emit(out, j);
    } else {
        out << "concurrence C = " << fixed(c) << "\n";
        if (r.degenerate) {
            out << "degenerate channel (zero Schmidt coefficient): MASFI = 0\n";
        } else {
            out << "MASFI (numerical) = " << fixed(r.value) << " at theta = " << fixed(r.theta, 6)
                << ", phi = " << fixed(r.phi, 6) << (r.converged ? "" : " (NOT converged)") << "\n";
        }
        out << "2C/(1+C)          = " << fixed(formula) << "\n";
    }
    return r.converged ? kExitOk : kExitAssertion;
}

void add_format(CLI::App *cmd, Options &o) {
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
}

void add_tol(CLI::App *cmd, Options &o) {
    cmd->add_option("--tol", o.tol, "Absolute tolerance (default 1e-9, or QTEL_TOL)");
}

}  // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"qtel: N-qubit teleportation and magic partial basis workbench"};
    app.name("qtel");
    app.require_subcommand(1);

    auto *channel = app.add_subcommand("channel", "Resource channel checks");
    channel->require_subcommand(1);
    auto *check = channel->add_subcommand(
        "check", "Check the perfect-channel condition E^dagger E = 2^-N 1 on the reshaped resource state");
    check->add_option("--file", o.file, "Channel state JSON file")->required();
    add_tol(check, o);
    add_format(check, o);

    auto *bell = app.add_subcommand("bell", "Bell measurement bases");
    bell->require_subcommand(1);
    auto *gen = bell->add_subcommand(
        "gen", "Generate B(alpha) = sigma(alpha) B(0) from a seed and check completeness sum B_ij B*_kl = d_ik d_jl");
    gen->add_option("--n", o.n, "Qubits per side")->required();
    gen->add_option("--seed-file", o.seed_file, "Seed state JSON file (default: n Bell pairs)");
    add_tol(gen, o);
    add_format(gen, o);

    auto *teleport = app.add_subcommand("teleport", "Teleportation protocol");
    teleport->require_subcommand(1);
    auto *run = teleport->add_subcommand(
        "run", "Run the protocol: Bob amplitudes E^T B^dagger I, correction U = 2^N B E*, fidelity |<I|T>|^2");
    run->add_option("--info", o.info_file, "Information state JSON file")->required();
    run->add_option("--channel", o.channel_file, "Channel state JSON file")->required();
    auto *basis_opt = run->add_option("--basis", o.basis_file, "Bell basis JSON file");
    run->add_option("--n", o.n, "Use the standard Bell basis for n qubits")->excludes(basis_opt);
    run->add_option("--mode", o.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
    run->add_option("--shots", o.shots, "Shots in sampled mode");
    run->add_option("--seed", o.seed, "Seed for sampled mode");
    run->add_flag("--assert-perfect", o.assert_perfect, "Exit 1 unless every outcome has fidelity 1");
    add_tol(run, o);
    add_format(run, o);

    auto *magic = app.add_subcommand("magic", "Magic partial bases");
    magic->require_subcommand(1);
    auto *cliques = magic->add_subcommand(
        "cliques", "Enumerate maximal sets of mutually anticommuting Pauli strings (partial basis generators)");
    cliques->add_option("--n", o.n, "Qubits per side (1..3)")->required();
    add_format(cliques, o);
    auto *catalog = magic->add_subcommand(
        "catalog", "The sixteen N = 2 states, their partial bases, and reconciliation with the printed lists");
    add_format(catalog, o);
    auto *verify = magic->add_subcommand(
        "verify", "Check M^dagger M = 2^-N 1 for common-phase combinations of identity and i*M_l members");
    verify->add_option("--set", o.set, "Comma-separated letter names (F,A1,..), indices or Pauli strings")
        ->required();
    verify->add_option("--n", o.n, "Qubits per side, for quaternary indices");
    verify->add_option("--trials", o.trials, "Random coefficient draws");
    verify->add_option("--seed", o.seed, "Master seed");
    verify->add_option("--phases", o.phases, "common or independent coefficient phases");
    add_tol(verify, o);
    add_format(verify, o);
    auto *witness = magic->add_subcommand(
        "witness", "Clique bound: fewer than 4^N - 1 mutually anticommuting strings means no full magic basis");
    witness->add_option("--n", o.n, "Qubits per side (1..3)")->required();
    add_format(witness, o);

    auto *masfi_cmd = app.add_subcommand(
        "masfi", "Minimum assured fidelity of a 2-qubit channel against 2C/(1+C)");
    masfi_cmd->add_option("--channel", o.channel_file, "Channel state JSON file");
    masfi_cmd->add_option("--lambda", o.lambda, "Use sqrt(l)|00> + sqrt(1-l)|11>");
    add_tol(masfi_cmd, o);
    add_format(masfi_cmd, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        // help() delegates to the deepest selected subcommand.
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "qtel: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*check) {
            return channel_check(o, out);
        }
        if (*gen) {
            return bell_gen(o, out);
        }
        if (*run) {
            return teleport_run(o, out);
        }
        if (*cliques) {
            return magic_cliques(o, out);
        }
        if (*catalog) {
            return magic_catalog(o, out);
        }
        if (*verify) {
            return magic_verify(o, out, err);
        }
        if (*witness) {
            return magic_witness(o, out);
        }
        if (*masfi_cmd) {
            return masfi(o, out);
        }
    } catch (const UsageError &e) {
        err << "qtel: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError &e) {
        err << "qtel: " << e.what() << " (deviation " << e.deviation << ")\n";
        return kExitAssertion;
    } catch (const InternalConsistencyError &e) {
        err << "qtel: internal consistency failure: " << e.what() << "\n";
        return kExitAssertion;
    } catch (const std::exception &e) {
        err << "qtel: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "qtel: no subcommand selected\n";
    return kExitUsage;
}

}  // namespace qtel::cli
