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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "lightcone/circuit.hpp"

namespace lightcone {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Maximum qubit index + 1 representable by a PauliString.
inline constexpr std::size_t kMaxPauliQubits = 64;

/// Unsigned Pauli string in symplectic form: bit q of x/z set for X (x), Z (z), Y (both).
struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    static PauliString single(Qubit q, Pauli p);
    /// Builds from (qubit, letter) pairs. Throws ValidationError on repeats or identity letters.
    static PauliString from_letters(const std::vector<std::pair<Qubit, Pauli>> &letters);

    Pauli at(Qubit q) const;
    bool is_identity() const {
        return (x | z) == 0;
    }
    std::uint64_t support_mask() const {
        return x | z;
    }
    std::vector<Qubit> support() const;
    std::size_t weight() const;
    bool commutes_with(const PauliString &other) const;
    /// True when every qubit in the common support carries the same letter.
    bool qubitwise_compatible(const PauliString &other) const;

    auto operator<=>(const PauliString &) const = default;
};

/// "X0 X1" style; "I" for the identity.
std::string to_string(const PauliString &p);

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;

    std::vector<Qubit> support() const {
        return string.support();
    }
    bool is_identity() const {
        return string.is_identity();
    }

    bool operator==(const PauliTerm &) const = default;
};

std::string to_string(const PauliTerm &term);

/// Original qubit -> reduced qubit.
using QubitMap = std::map<Qubit, Qubit>;

/// Re-indexes a term through `relabel`. Throws ValidationError if a support qubit is unmapped.
PauliTerm relabel_term(const PauliTerm &term, const QubitMap &relabel);

class Hamiltonian {
   public:
    /// Merges identical strings (first-occurrence order kept) and drops non-identity terms that merge to zero.
    Hamiltonian(std::size_t n_qubits, const std::vector<PauliTerm> &terms);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    /// All terms, including the identity term when present.
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    double identity_coefficient() const;
    std::vector<PauliTerm> measured_terms() const;
    /// Largest |h| over non-identity terms, 0 if none.
    double max_abs_coefficient() const;
    bool is_diagonal() const;
    /// <b|H|b> for a computational basis state (little-endian bits).
    double diagonal_value(std::uint64_t bits) const;

    bool operator==(const Hamiltonian &) const = default;

   private:
    std::size_t n_qubits_;
    std::vector<PauliTerm> terms_;
};

/// Parses `coef [P q]*` terms joined by + or -. Without `n_qubits` the register size is the largest index + 1.
Hamiltonian parse_hamiltonian(std::string_view text, std::optional<std::size_t> n_qubits = std::nullopt);
std::string serialize(const Hamiltonian &h);

class Graph {
   public:
    Graph(std::size_t n_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t n_vertices() const {
        return n_vertices_;
    }
    const std::vector<std::pair<std::size_t, std::size_t>> &edges() const {
        return edges_;
    }
    /// Number of edges crossing the bipartition given by `bits`.
    std::size_t cut_value(std::uint64_t bits) const;

    bool operator==(const Graph &) const = default;

   private:
    std::size_t n_vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// `vertices N` header followed by `edge u v` lines; `#` comments.
Graph parse_graph(std::string_view text);
std::string serialize(const Graph &g);

/// Path 0-1-2 attached to the triangle 2-3-4.
Graph dragon_graph();

/// Negated MAXCUT objective -1/2 (|E| - sum Z_i Z_j); its minimum is minus the maximum cut.
Hamiltonian maxcut_hamiltonian(const Graph &graph);

Hamiltonian deuteron_hamiltonian();

/// Brute-force maximum cut size.
std::size_t max_cut(const Graph &graph);

/// Ground-state energy: basis enumeration for diagonal H (n <= 20), dense diagonalization otherwise (n <= 10).
double exact_min_expectation(const Hamiltonian &h);

}  // namespace lightcone
