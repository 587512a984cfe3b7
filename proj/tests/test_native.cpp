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

#include "lightcone/benchmarks.hpp"
#include "lightcone/causal_cone.hpp"
#include "lightcone/error.hpp"
#include "lightcone/native.hpp"
#include "lightcone/simulator.hpp"
#include "oracle.hpp"
#include "random_circuits.hpp"

using namespace lightcone;
using testing_support::random_circuit;

namespace {

constexpr double kPi = std::numbers::pi;

bool only_native(const Circuit &c) {
    for (const Gate &g : c.gates()) {
        if (!is_native(g.kind)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(native, rules_verify) {
    std::mt19937_64 rng(2);
    for (const RewriteRule &r : rewrite_rules()) {
        EXPECT_TRUE(verify_rule(r, rng)) << r.name;
        Circuit lhs = lightcone::bind(Circuit(r.n_qubits, r.pattern), {{"t", 0.77}}, BindMode::IgnoreExtra);
        Circuit rhs = lightcone::bind(Circuit(r.n_qubits, r.replacement), {{"t", 0.77}}, BindMode::IgnoreExtra);
        EXPECT_TRUE(oracle::equal_up_to_phase(oracle::unitary(lhs), oracle::unitary(rhs), 1e-10)) << r.name;
    }
    EXPECT_THROW(rewrite_rule("swap"), ValidationError);
}

TEST(native, cnot_translation) {
    Circuit c = to_native(build_circuit(2, {Gate::cnot(0, 1)}));
    EXPECT_EQ(c.size(), 5u);
    EXPECT_EQ(count_gates(c).xx, 1u);
    EXPECT_TRUE(unitary_equiv(c, build_circuit(2, {Gate::cnot(0, 1)})));
    EXPECT_TRUE(to_native(build_circuit(3, {})).empty());
}

TEST(native, deuteron_counts_and_equivalence) {
    Circuit a = deuteron_ansatz();
    Circuit level0 = compile_native(a, 0);
    Circuit level1 = compile_native(a, 1);
    EXPECT_EQ(count_gates(level0).xx, 7u);
    EXPECT_EQ(count_gates(level1).xx, 5u);
    EXPECT_TRUE(only_native(level0));
    EXPECT_TRUE(only_native(level1));
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        ParamVector p{{"phi", u(rng)}, {"lambda1", u(rng)}, {"lambda2", u(rng)}};
        EXPECT_TRUE(unitary_equiv(lightcone::bind(a, p), lightcone::bind(level0, p)));
        EXPECT_TRUE(unitary_equiv(lightcone::bind(a, p), lightcone::bind(level1, p)));
    }
}

TEST(native, reduced_deuteron_xx_counts) {
    Problem d = *builtin_problem("deuteron");
    ReducedSet rs = reduced_set(d.ansatz, d.hamiltonian);
    std::vector<std::size_t> xx;
    for (const ReducedCircuit &rc : rs.circuits) {
        Circuit n = compile_native(rc.circuit);
        xx.push_back(count_gates(n).xx);
        EXPECT_TRUE(unitary_equiv(lightcone::bind(rc.circuit, d.reference_params, BindMode::IgnoreExtra),
                                  lightcone::bind(n, d.reference_params, BindMode::IgnoreExtra)));
    }
    EXPECT_EQ(xx, (std::vector<std::size_t>{3, 4, 3, 1, 2, 2}));
}

TEST(native, dragon) {
    Problem q = *builtin_problem("dragon");
    Circuit n = compile_native(q.ansatz);
    EXPECT_EQ(count_gates(n).xx, 5u);
    EXPECT_TRUE(unitary_equiv(lightcone::bind(q.ansatz, q.reference_params),
                              lightcone::bind(n, q.reference_params)));
}

TEST(native, random_circuits) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5;
        Circuit c = random_circuit(rng, n, rng() % 31);
        Circuit native = to_native(c);
        Circuit opt = peephole_optimize(native);
        ASSERT_TRUE(only_native(opt));
        ASSERT_TRUE(unitary_equiv(c, opt)) << serialize(c);
        ASSERT_TRUE(oracle::equal_up_to_phase(oracle::unitary(c), oracle::unitary(opt), 1e-9));
        EXPECT_LE(count_gates(opt).xx, count_gates(native).xx);
        EXPECT_LE(opt.size(), native.size());
    }
}

TEST(native, peephole_examples) {
    Circuit merged = peephole_optimize(build_circuit(
        1, {Gate::rz(0, Angle::param("a")), Gate::rz(0, Angle::param("b", 1.0, 0.0))}));
    EXPECT_EQ(merged.size(), 2u);
    Circuit same = peephole_optimize(build_circuit(1, {Gate::rz(0, Angle::literal(0.3)), Gate::rz(0, Angle::literal(0.4))}));
    ASSERT_EQ(same.size(), 1u);
    EXPECT_NEAR(same[0].angle.value(), 0.7, 1e-15);
    Circuit sym = peephole_optimize(build_circuit(1, {Gate::rz(0, Angle::param("a")), Gate::rz(0, Angle::param("a", 2.0))}));
    ASSERT_EQ(sym.size(), 1u);
    EXPECT_EQ(sym[0].angle, Angle::param("a", 3.0));
    Circuit cancel = peephole_optimize(
        build_circuit(2, {Gate::xx(0, 1, Angle::literal(kPi / 2)), Gate::xx(0, 1, Angle::literal(-kPi / 2))}));
    EXPECT_TRUE(cancel.empty());
    Circuit through = peephole_optimize(build_circuit(
        2, {Gate::rx(0, Angle::literal(0.5)), Gate::xx(0, 1, Angle::literal(0.3)), Gate::rx(0, Angle::literal(-0.5))}));
    EXPECT_EQ(through.size(), 1u);
    Circuit blocked = peephole_optimize(build_circuit(
        2, {Gate::rz(0, Angle::literal(0.5)), Gate::xx(0, 1, Angle::literal(0.3)), Gate::rz(0, Angle::literal(-0.5))}));
    EXPECT_EQ(blocked.size(), 3u);
    EXPECT_TRUE(peephole_optimize(build_circuit(1, {Gate::rx(0, Angle::literal(4 * kPi))})).empty());
}

TEST(native, final_rz_absorption_keeps_z_statistics) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c = to_native(random_circuit(rng, 3, 15));
        Circuit absorbed = peephole_optimize(c, {.absorb_final_rz = true});
        EXPECT_LE(absorbed.size(), peephole_optimize(c).size());
        std::vector<double> p = simulate(c).probabilities();
        std::vector<double> q = simulate(absorbed).probabilities();
        for (std::size_t i = 0; i < p.size(); ++i) {
            EXPECT_NEAR(p[i], q[i], 1e-12);
        }
    }
}

TEST(native, unitary_equiv_examples) {
    EXPECT_FALSE(unitary_equiv(build_circuit(1, {Gate::rx(0, Angle::literal(kPi))}),
                               build_circuit(1, {Gate::ry(0, Angle::literal(kPi))})));
    Circuit c = build_circuit(2, {Gate::h(0), Gate::cnot(0, 1)});
    Circuit d = build_circuit(2, {Gate::h(0), Gate::cnot(0, 1), Gate::rz(1, Angle::literal(2 * kPi))});
    EXPECT_TRUE(unitary_equiv(c, d));
    EXPECT_THROW(unitary_equiv(c, build_circuit(3, {})), ValidationError);
    EXPECT_THROW(circuit_unitary(build_circuit(11, {})), GuardError);
    EXPECT_THROW(compile_native(c, 2), ValidationError);
}
