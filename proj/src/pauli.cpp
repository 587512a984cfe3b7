// Copyright 2026 The Lightcone Authors
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

#include "lightcone/pauli.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <set>

#include "lightcone/error.hpp"
#include "text_cursor.hpp"

namespace lightcone {

char pauli_char(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

PauliString PauliString::single(Qubit q, Pauli p) {
    if (q >= kMaxPauliQubits) {
        throw ValidationError("qubit index " + std::to_string(q) + " exceeds Pauli string capacity");
    }
    PauliString s;
    std::uint64_t bit = std::uint64_t{1} << q;
    if (p == Pauli::X || p == Pauli::Y) {
        s.x = bit;
    }
    if (p == Pauli::Z || p == Pauli::Y) {
        s.z = bit;
    }
    return s;
}

PauliString PauliString::from_letters(const std::vector<std::pair<Qubit, Pauli>> &letters) {
    PauliString s;
    for (auto [q, p] : letters) {
        if (p == Pauli::I) {
            throw ValidationError("identity letter in Pauli string");
        }
        PauliString one = single(q, p);
        if (one.support_mask() & s.support_mask()) {
            throw ValidationError("qubit " + std::to_string(q) + " repeated in Pauli string");
        }
        s.x |= one.x;
        s.z |= one.z;
    }
    return s;
}

Pauli PauliString::at(Qubit q) const {
    if (q >= kMaxPauliQubits) {
        return Pauli::I;
    }
    int xb = (x >> q) & 1;
    int zb = (z >> q) & 1;
    if (xb && zb) {
        return Pauli::Y;
    }
    return xb ? Pauli::X : (zb ? Pauli::Z : Pauli::I);
}

std::vector<Qubit> PauliString::support() const {
    std::vector<Qubit> out;
    for (std::uint64_t m = support_mask(); m; m &= m - 1) {
        out.push_back(static_cast<Qubit>(std::countr_zero(m)));
    }
    return out;
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::popcount(support_mask()));
}

bool PauliString::commutes_with(const PauliString &other) const {
    return (std::popcount((x & other.z) ^ (z & other.x)) & 1) == 0;
}

bool PauliString::qubitwise_compatible(const PauliString &other) const {
    std::uint64_t common = support_mask() & other.support_mask();
    return ((x ^ other.x) & common) == 0 && ((z ^ other.z) & common) == 0;
}

std::string to_string(const PauliString &p) {
    if (p.is_identity()) {
        return "I";
    }
    std::string out;
    for (Qubit q : p.support()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += pauli_char(p.at(q));
        out += std::to_string(q);
    }
    return out;
}

namespace {

std::string format_coefficient(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(const PauliTerm &term) {
    std::string out = format_coefficient(term.coefficient);
    if (!term.is_identity()) {
        out += ' ' + to_string(term.string);
    }
    return out;
}

PauliTerm relabel_term(const PauliTerm &term, const QubitMap &relabel) {
    std::vector<std::pair<Qubit, Pauli>> letters;
    for (Qubit q : term.support()) {
        auto it = relabel.find(q);
        if (it == relabel.end()) {
            throw ValidationError("relabel map does not cover qubit " + std::to_string(q));
        }
        letters.emplace_back(it->second, term.string.at(q));
    }
    return PauliTerm{term.coefficient, PauliString::from_letters(letters)};
}

Hamiltonian::Hamiltonian(std::size_t n_qubits, const std::vector<PauliTerm> &terms) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxPauliQubits) {
        throw ValidationError("Hamiltonian qubit count must be in [1, 64]");
    }
    for (const PauliTerm &t : terms) {
        if (!std::isfinite(t.coefficient)) {
            throw ValidationError("non-finite coefficient on " + to_string(t.string));
        }
        for (Qubit q : t.support()) {
            if (q >= n_qubits) {
                throw ValidationError("term " + to_string(t.string) + " acts on qubit " + std::to_string(q) +
                                      " outside " + std::to_string(n_qubits) + " qubits");
            }
        }
        auto it = std::find_if(terms_.begin(), terms_.end(), [&](const PauliTerm &e) { return e.string == t.string; });
        if (it == terms_.end()) {
            terms_.push_back(t);
        } else {
            it->coefficient += t.coefficient;
        }
    }
    std::erase_if(terms_, [](const PauliTerm &t) { return !t.is_identity() && t.coefficient == 0.0; });
}

double Hamiltonian::identity_coefficient() const {
    for (const PauliTerm &t : terms_) {
        if (t.is_identity()) {
            return t.coefficient;
        }
    }
    return 0.0;
}

std::vector<PauliTerm> Hamiltonian::measured_terms() const {
    std::vector<PauliTerm> out;
    for (const PauliTerm &t : terms_) {
        if (!t.is_identity()) {
            out.push_back(t);
        }
    }
    return out;
}

double Hamiltonian::max_abs_coefficient() const {
    double m = 0.0;
    for (const PauliTerm &t : terms_) {
        if (!t.is_identity()) {
            m = std::max(m, std::abs(t.coefficient));
        }
    }
    return m;
}

bool Hamiltonian::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm &t) { return t.string.x == 0; });
}

double Hamiltonian::diagonal_value(std::uint64_t bits) const {
    double v = 0.0;
    for (const PauliTerm &t : terms_) {
        if (t.string.x != 0) {
            continue;
        }
        v += (std::popcount(bits & t.string.z) & 1) ? -t.coefficient : t.coefficient;
    }
    return v;
}

namespace {

struct HamToken {
    enum Kind { Number, Letter, Plus, Minus, Star } kind;
    double number = 0.0;
    Pauli letter = Pauli::I;
    std::size_t qubit = 0;
    std::size_t line = 0;
    std::size_t column = 0;
};

std::vector<HamToken> tokenize_hamiltonian(std::string_view text) {
    std::vector<HamToken> out;
    std::size_t line_number = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_number;
        detail::TextCursor cur(detail::strip_comment(line), line_number);
        while (!cur.at_end()) {
            HamToken tok{HamToken::Number};
            tok.line = line_number;
            char c = cur.peek();
            tok.column = cur.column();
            if (cur.consume('+')) {
                tok.kind = HamToken::Plus;
            } else if (cur.consume('-')) {
                tok.kind = HamToken::Minus;
            } else if (cur.consume('*')) {
                tok.kind = HamToken::Star;
            } else if (cur.at_number()) {
                tok.number = cur.number();
            } else if (c == 'X' || c == 'Y' || c == 'Z' || c == 'I') {
                std::string word = cur.identifier();
                if (word.size() < 2 ||
                    !std::all_of(word.begin() + 1, word.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
                    throw ParseError("malformed Pauli factor '" + word + "'", line_number, tok.column);
                }
                tok.kind = HamToken::Letter;
                tok.letter = c == 'X' ? Pauli::X : c == 'Y' ? Pauli::Y : c == 'Z' ? Pauli::Z : Pauli::I;
                tok.qubit = std::stoul(word.substr(1));
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line_number, tok.column);
            }
            out.push_back(tok);
        }
    }
    return out;
}

}  // namespace

Hamiltonian parse_hamiltonian(std::string_view text, std::optional<std::size_t> n_qubits) {
    std::vector<HamToken> toks = tokenize_hamiltonian(text);
    if (toks.empty()) {
        throw ParseError("empty Hamiltonian", 1, 1);
    }
    std::vector<PauliTerm> terms;
    std::size_t max_index = 0;
    bool any_qubit = false;
    std::size_t k = 0;
    auto fail_at = [&](const std::string &message) -> void {
        const HamToken &t = k < toks.size() ? toks[k] : toks.back();
        throw ParseError(message, t.line, t.column);
    };
    bool first = true;
    while (k < toks.size()) {
        double sign = 1.0;
        if (toks[k].kind == HamToken::Plus || toks[k].kind == HamToken::Minus) {
            sign = toks[k].kind == HamToken::Minus ? -1.0 : 1.0;
            ++k;
        } else if (!first) {
            fail_at("expected '+' or '-' between terms");
        }
        first = false;
        if (k >= toks.size()) {
            fail_at("dangling sign");
        }
        double coefficient = 1.0;
        bool have_factor = false;
        if (toks[k].kind == HamToken::Number) {
            coefficient = toks[k].number;
            have_factor = true;
            ++k;
            if (k < toks.size() && toks[k].kind == HamToken::Star) {
                ++k;
                if (k >= toks.size() || toks[k].kind != HamToken::Letter) {
                    fail_at("expected Pauli factor after '*'");
                }
            }
        }
        std::vector<std::pair<Qubit, Pauli>> letters;
        while (k < toks.size() && toks[k].kind == HamToken::Letter) {
            const HamToken &t = toks[k];
            have_factor = true;
            if (n_qubits && t.qubit >= *n_qubits) {
                throw ParseError("qubit " + std::to_string(t.qubit) + " out of range for " +
                                     std::to_string(*n_qubits) + " qubits",
                                 t.line, t.column);
            }
            if (t.qubit >= kMaxPauliQubits) {
                throw ParseError("qubit index too large", t.line, t.column);
            }
            max_index = std::max(max_index, t.qubit);
            any_qubit = true;
            if (t.letter != Pauli::I) {
                if (std::any_of(letters.begin(), letters.end(), [&](const auto &e) { return e.first == t.qubit; })) {
                    throw ParseError("qubit " + std::to_string(t.qubit) + " repeated in term", t.line, t.column);
                }
                letters.emplace_back(static_cast<Qubit>(t.qubit), t.letter);
            }
            ++k;
        }
        if (!have_factor) {
            fail_at("expected coefficient or Pauli factor");
        }
        terms.push_back(PauliTerm{sign * coefficient, PauliString::from_letters(letters)});
    }
    std::size_t n = n_qubits ? *n_qubits : (any_qubit ? max_index + 1 : 1);
    return Hamiltonian(n, terms);
}

std::string serialize(const Hamiltonian &h) {
    std::string out;
    for (const PauliTerm &t : h.terms()) {
        double c = t.coefficient;
        if (out.empty()) {
            out = format_coefficient(c);
        } else {
            out += c < 0 ? " - " : " + ";
            out += format_coefficient(std::abs(c));
        }
        if (!t.is_identity()) {
            out += ' ' + to_string(t.string);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + "\n";
}

Graph::Graph(std::size_t n_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
    if (n_vertices == 0 || n_vertices > kMaxPauliQubits) {
        throw ValidationError("graph vertex count must be in [1, 64]");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges_) {
        if (u >= n_vertices || v >= n_vertices) {
            throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        }
        if (u == v) {
            throw ValidationError("self-loop on vertex " + std::to_string(u));
        }
        if (!seen.insert(std::minmax(u, v)).second) {
            throw ValidationError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
    }
}

std::size_t Graph::cut_value(std::uint64_t bits) const {
    std::size_t cut = 0;
    for (auto [u, v] : edges_) {
        cut += ((bits >> u) ^ (bits >> v)) & 1;
    }
    return cut;
}

Graph parse_graph(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t line_number = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_number;
        detail::TextCursor cur(detail::strip_comment(line), line_number);
        if (cur.at_end()) {
            continue;
        }
        std::size_t col = cur.column();
        std::string word = cur.identifier();
        if (word == "vertices" && !n) {
            n = cur.integer();
        } else if (word == "edge" && n) {
            std::size_t u = cur.integer();
            std::size_t v = cur.integer();
            if (u >= *n || v >= *n) {
                throw ParseError("edge endpoint out of range", line_number, col);
            }
            edges.emplace_back(u, v);
        } else {
            throw ParseError(n ? "expected 'edge u v'" : "expected header 'vertices N'", line_number, col);
        }
        if (!cur.at_end()) {
            cur.fail("unexpected trailing text");
        }
    }
    if (!n) {
        throw ParseError("missing header 'vertices N'", std::max<std::size_t>(line_number, 1), 1);
    }
    return Graph(*n, std::move(edges));
}

std::string serialize(const Graph &g) {
    std::string out = "vertices " + std::to_string(g.n_vertices()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

Graph dragon_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
}

Hamiltonian maxcut_hamiltonian(const Graph &graph) {
    if (graph.edges().empty()) {
        throw ValidationError("MAXCUT needs at least one edge");
    }
    std::vector<PauliTerm> terms;
    terms.push_back({-0.5 * static_cast<double>(graph.edges().size()), {}});
    for (auto [u, v] : graph.edges()) {
        terms.push_back({0.5, PauliString::from_letters({{static_cast<Qubit>(u), Pauli::Z},
                                                        {static_cast<Qubit>(v), Pauli::Z}})});
    }
    return Hamiltonian(graph.n_vertices(), terms);
}

Hamiltonian deuteron_hamiltonian() {
    auto pair = [](Qubit a, Pauli p) { return PauliString::from_letters({{a, p}, {a + 1, p}}); };
    return Hamiltonian(4, {
                              {28.657, {}},
                              {-2.143, pair(0, Pauli::X)},
                              {-3.913, pair(1, Pauli::X)},
                              {-5.671, pair(2, Pauli::X)},
                              {-2.143, pair(0, Pauli::Y)},
                              {-3.913, pair(1, Pauli::Y)},
                              {-5.671, pair(2, Pauli::Y)},
                              {0.218, PauliString::single(0, Pauli::Z)},
                              {-6.125, PauliString::single(1, Pauli::Z)},
                              {-9.625, PauliString::single(2, Pauli::Z)},
                              {-13.125, PauliString::single(3, Pauli::Z)},
                          });
}

std::size_t max_cut(const Graph &graph) {
    if (graph.n_vertices() > 24) {
        throw GuardError("brute-force MAXCUT limited to 24 vertices");
    }
    std::size_t best = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << graph.n_vertices()); ++b) {
        best = std::max(best, graph.cut_value(b));
    }
    return best;
}

double exact_min_expectation(const Hamiltonian &h) {
    std::size_t n = h.n_qubits();
    if (h.is_diagonal()) {
        if (n > 20) {
            throw GuardError("diagonal enumeration limited to 20 qubits");
        }
        double best = std::numeric_limits<double>::infinity();
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            best = std::min(best, h.diagonal_value(b));
        }
        return best;
    }
    if (n > 10) {
        throw GuardError("dense diagonalization limited to 10 qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const PauliTerm &t : h.terms()) {
        const std::uint64_t flip = t.string.x;
        const int n_y = std::popcount(t.string.x & t.string.z);
        const std::complex<double> phase = std::pow(std::complex<double>(0, 1), n_y);
        for (std::uint64_t b = 0; b < dim; ++b) {
            double sign = (std::popcount(b & t.string.z) & 1) ? -1.0 : 1.0;
            m(b ^ flip, b) += t.coefficient * sign * phase;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace lightcone
