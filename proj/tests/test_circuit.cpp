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

#include <numbers>
#include <random>

#include "lightcone/circuit.hpp"
#include "lightcone/error.hpp"

using namespace lightcone;

namespace {

Circuit deuteron_like() {
    return build_circuit(4, {
                                Gate::rx(0, Angle::literal(std::numbers::pi)),
                                Gate::ry(1, Angle::param("phi")),
                                Gate::cnot(1, 0),
                                Gate::cry(1, 2, Angle::param("lambda1")),
                                Gate::cnot(2, 1),
                                Gate::cry(2, 3, Angle::param("lambda2")),
                                Gate::cnot(3, 2),
                            });
}

}  // namespace

TEST(circuit, infers_parameters_in_order) {
    Circuit c = deuteron_like();
    EXPECT_EQ(c.size(), 7u);
    EXPECT_EQ(c.parameters(), (std::vector<std::string>{"phi", "lambda1", "lambda2"}));
    EXPECT_EQ(c.count(GateKind::CNOT), 3u);
    EXPECT_EQ(c.two_qubit_count(), 5u);
}

TEST(circuit, empty) {
    Circuit c = build_circuit(1, {});
    EXPECT_TRUE(c.empty());
    EXPECT_TRUE(c.parameters().empty());
    EXPECT_EQ(c.depth(), 0u);
}

TEST(circuit, rejects_bad_gates) {
    EXPECT_THROW(build_circuit(2, {Gate::cnot(0, 0)}), ValidationError);
    EXPECT_THROW(build_circuit(2, {Gate::h(2)}), ValidationError);
    EXPECT_THROW(build_circuit(0, {}), ValidationError);
}

TEST(circuit, declared_parameters_must_match) {
    std::vector<Gate> gates{Gate::rx(0, Angle::param("a"))};
    EXPECT_NO_THROW(Circuit(1, gates, {"a"}));
    EXPECT_THROW(Circuit(1, gates, {"a", "b"}), ValidationError);
    EXPECT_THROW(Circuit(1, gates, {}), ValidationError);
}

TEST(circuit, depth) {
    Circuit c = build_circuit(3, {Gate::h(0), Gate::h(1), Gate::cnot(0, 1), Gate::h(2)});
    EXPECT_EQ(c.depth(), 2u);
}

TEST(circuit, bind) {
    Circuit c = deuteron_like();
    Circuit b = lightcone::bind(c, {{"phi", 0.858}, {"lambda1", 0.958}, {"lambda2", 0.758}});
    EXPECT_TRUE(b.is_bound());
    EXPECT_DOUBLE_EQ(b[1].angle.value(), 0.858);
    EXPECT_DOUBLE_EQ(b[5].angle.value(), 0.758);
    EXPECT_EQ(bind(b, {}), b);
    EXPECT_THROW(bind(c, {{"phi", 0.858}}), ValidationError);
    EXPECT_THROW(bind(b, {{"phi", 0.858}}), ValidationError);
    EXPECT_NO_THROW(bind(b, {{"phi", 0.858}}, BindMode::IgnoreExtra));
}

TEST(circuit, affine_binding) {
    Circuit c = build_circuit(1, {Gate::rz(0, Angle::param("g", 0.5, -1.0))});
    EXPECT_DOUBLE_EQ(bind(c, {{"g", 4.0}})[0].angle.value(), 1.0);
}

TEST(circuit, add_angles) {
    auto s = add_angles(Angle::param("a", 2.0, 1.0), Angle::param("a", -2.0, 0.5));
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(s->is_literal());
    EXPECT_DOUBLE_EQ(s->value(), 1.5);
    EXPECT_FALSE(add_angles(Angle::param("a"), Angle::param("b")).has_value());
}

TEST(circuit_text, round_trip_deuteron) {
    Circuit c = deuteron_like();
    EXPECT_EQ(parse_circuit(serialize(c)), c);
}

TEST(circuit_text, parses_expressions) {
    Circuit c = parse_circuit(
        "# qaoa edge\n"
        "qubits 5\n"
        "H 0\n"
        "CNOT 0 1   # block\n"
        "RZ(0.5*γ) 1\n"
        "CNOT 0 1\n"
        "RX(2*(β - pi/4)) 0\n"
        "XX(-pi/2) 3 4\n");
    EXPECT_EQ(c.n_qubits(), 5u);
    EXPECT_EQ(c.parameters(), (std::vector<std::string>{"γ", "β"}));
    EXPECT_EQ(c[2].angle, Angle::param("γ", 0.5, 0.0));
    EXPECT_DOUBLE_EQ(c[4].angle.scale, 2.0);
    EXPECT_DOUBLE_EQ(c[4].angle.offset, -std::numbers::pi / 2);
    EXPECT_DOUBLE_EQ(c[5].angle.value(), -std::numbers::pi / 2);
}

TEST(circuit_text, errors_carry_position) {
    try {
        parse_circuit("qubits 4\nCNOT 0 5\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 8u);
    }
    EXPECT_THROW(parse_circuit("qubits 2\nFOO 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("H 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nRX(a*b) 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nRX(a+b) 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nRX(1 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nCNOT 1 1\n"), ParseError);
    EXPECT_THROW(parse_circuit(""), ParseError);
}

TEST(circuit_text, random_round_trip) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-7.0, 7.0);
    const GateKind kinds[] = {GateKind::H,    GateKind::RX,  GateKind::RY, GateKind::RZ,
                              GateKind::CNOT, GateKind::CRY, GateKind::XX};
    const std::string syms[] = {"a", "theta_1", "λ2"};
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 6;
        std::vector<Gate> gates;
        for (std::size_t k = 0; k < rng() % 25; ++k) {
            GateKind kind = kinds[rng() % 7];
            if (gate_arity(kind) == 2 && n < 2) {
                kind = GateKind::RZ;
            }
            Gate g{kind, {static_cast<Qubit>(rng() % n), 0}, {}};
            if (gate_arity(kind) == 2) {
                do {
                    g.qubits[1] = static_cast<Qubit>(rng() % n);
                } while (g.qubits[1] == g.qubits[0]);
            }
            if (gate_has_angle(kind)) {
                g.angle = rng() % 2 ? Angle::literal(u(rng)) : Angle::param(syms[rng() % 3], u(rng), u(rng));
            }
            gates.push_back(g);
        }
        Circuit c = build_circuit(n, gates);
        EXPECT_EQ(parse_circuit(serialize(c)), c) << serialize(c);
    }
}
