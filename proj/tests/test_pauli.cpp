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

#include <gtest/gtest.h>

#include <random>

#include "lightcone/error.hpp"
#include "lightcone/pauli.hpp"

using namespace lightcone;

TEST(pauli, string_basics) {
    PauliString p = PauliString::from_letters({{3, Pauli::Y}, {0, Pauli::X}});
    EXPECT_EQ(p.at(0), Pauli::X);
    EXPECT_EQ(p.at(3), Pauli::Y);
    EXPECT_EQ(p.at(1), Pauli::I);
    EXPECT_EQ(p.support(), (std::vector<Qubit>{0, 3}));
    EXPECT_EQ(to_string(p), "X0 Y3");
    EXPECT_FALSE(PauliString::single(0, Pauli::X).commutes_with(PauliString::single(0, Pauli::Z)));
    EXPECT_TRUE(PauliString::from_letters({{0, Pauli::X}, {1, Pauli::X}})
                    .commutes_with(PauliString::from_letters({{0, Pauli::Y}, {1, Pauli::Y}})));
    EXPECT_THROW(PauliString::from_letters({{0, Pauli::X}, {0, Pauli::Z}}), ValidationError);
}

TEST(pauli, parse_deuteron_string) {
    Hamiltonian h = parse_hamiltonian(
        "28.657 - 2.143 X0 X1 - 3.913 X1 X2 - 5.671 X2 X3 - 2.143 Y0 Y1 - 3.913 Y1 Y2 - 5.671 Y2 Y3\n"
        "+ 0.218 Z0 - 6.125 Z1 - 9.625 Z2 - 13.125 Z3");
    EXPECT_EQ(h.terms().size(), 11u);
    EXPECT_EQ(h, deuteron_hamiltonian());
}

TEST(pauli, parse_merges_and_identity) {
    Hamiltonian h = parse_hamiltonian("1.0 Z0 + 2.0 Z0");
    ASSERT_EQ(h.terms().size(), 1u);
    EXPECT_DOUBLE_EQ(h.terms()[0].coefficient, 3.0);
    Hamiltonian c = parse_hamiltonian("0.5");
    EXPECT_EQ(c.terms().size(), 1u);
    EXPECT_DOUBLE_EQ(c.identity_coefficient(), 0.5);
    EXPECT_TRUE(c.measured_terms().empty());
    EXPECT_EQ(parse_hamiltonian("2 * X1 Z0 - Z0 X1 + 1e-1").terms().size(), 2u);
    EXPECT_TRUE(parse_hamiltonian("Z0 - Z0 + 1", 2).measured_terms().empty());
}

TEST(pauli, parse_errors) {
    EXPECT_THROW(parse_hamiltonian("1.0 Z5", 4), ParseError);
    EXPECT_THROW(parse_hamiltonian("1.0 Q0"), ParseError);
    EXPECT_THROW(parse_hamiltonian("1.0 Z0 Z0"), ParseError);
    EXPECT_THROW(parse_hamiltonian("1.0 Z0 2.0"), ParseError);
    EXPECT_THROW(parse_hamiltonian("1.0 +"), ParseError);
    EXPECT_THROW(parse_hamiltonian(""), ParseError);
    try {
        parse_hamiltonian("1.0 Z0\n+ 2 Zx");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 5u);
    }
}

TEST(pauli, serialize_round_trip) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 8;
        std::vector<PauliTerm> terms;
        for (std::size_t k = 0; k < 1 + rng() % 8; ++k) {
            std::uint64_t mask = (std::uint64_t{1} << n) - 1;
            terms.push_back({u(rng), PauliString{rng() & mask, rng() & mask}});
        }
        Hamiltonian h(n, terms);
        EXPECT_EQ(parse_hamiltonian(serialize(h), n), h) << serialize(h);
    }
}

TEST(pauli, deuteron_properties) {
    Hamiltonian h = deuteron_hamiltonian();
    EXPECT_EQ(h.terms().size(), 11u);
    EXPECT_DOUBLE_EQ(h.identity_coefficient(), 28.657);
    EXPECT_DOUBLE_EQ(h.max_abs_coefficient(), 13.125);
    for (const PauliTerm &t : h.measured_terms()) {
        auto s = t.support();
        if (s.size() == 2) {
            EXPECT_EQ(s[1], s[0] + 1);
        }
    }
    EXPECT_NEAR(exact_min_expectation(h), -2.14, 0.01);
}

TEST(pauli, maxcut) {
    Graph g = dragon_graph();
    Hamiltonian h = maxcut_hamiltonian(g);
    EXPECT_DOUBLE_EQ(h.identity_coefficient(), -2.5);
    ASSERT_EQ(h.measured_terms().size(), 5u);
    for (const PauliTerm &t : h.measured_terms()) {
        EXPECT_DOUBLE_EQ(t.coefficient, 0.5);
    }
    EXPECT_EQ(max_cut(g), 4u);
    EXPECT_DOUBLE_EQ(exact_min_expectation(h), -4.0);

    Graph k2(2, {{0, 1}});
    EXPECT_DOUBLE_EQ(exact_min_expectation(maxcut_hamiltonian(k2)), -1.0);
    EXPECT_DOUBLE_EQ(exact_min_expectation(parse_hamiltonian("0.5")), 0.5);
}

TEST(pauli, maxcut_energy_is_negative_cut) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 11;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (rng() % 3 == 0) {
                    edges.emplace_back(u, v);
                }
            }
        }
        if (edges.empty()) {
            edges.emplace_back(0, 1);
        }
        Graph g(n, edges);
        Hamiltonian h = maxcut_hamiltonian(g);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            std::size_t cut = 0;
            for (auto [u, v] : edges) {
                cut += ((b >> u) & 1) != ((b >> v) & 1);
            }
            ASSERT_DOUBLE_EQ(h.diagonal_value(b), -static_cast<double>(cut));
        }
    }
}

TEST(pauli, graph_file) {
    Graph g = parse_graph("# dragon\nvertices 5\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 4\nedge 2 4\n");
    EXPECT_EQ(g, dragon_graph());
    EXPECT_EQ(parse_graph(serialize(g)), g);
    EXPECT_THROW(parse_graph("vertices 3\nedge 0 0\n"), ValidationError);
    EXPECT_THROW(parse_graph("vertices 3\nedge 0 1\nedge 1 0\n"), ValidationError);
    EXPECT_THROW(parse_graph("vertices 3\nedge 0 3\n"), ParseError);
    EXPECT_THROW(parse_graph("edge 0 1\n"), ParseError);
}

TEST(pauli, guards) {
    std::vector<PauliTerm> terms{{1.0, PauliString::single(20, Pauli::Z)}};
    EXPECT_THROW(exact_min_expectation(Hamiltonian(21, terms)), GuardError);
    std::vector<PauliTerm> dense{{1.0, PauliString::single(10, Pauli::X)}};
    EXPECT_THROW(exact_min_expectation(Hamiltonian(11, dense)), GuardError);
}
