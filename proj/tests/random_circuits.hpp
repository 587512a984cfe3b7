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
#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "lightcone/circuit.hpp"
#include "lightcone/pauli.hpp"

namespace testing_support {

/// Random literal angle; one draw in eight is a multiple of pi/2 to exercise the special cases.
inline double random_angle(std::mt19937_64 &rng) {
    if (rng() % 8 == 0) {
        return static_cast<double>(static_cast<int>(rng() % 9) - 4) * std::numbers::pi / 2;
    }
    return std::uniform_real_distribution<double>(-std::numbers::pi, std::numbers::pi)(rng);
}

/// Random bound circuit over the canonical and native kinds. `kinds` limits the gate alphabet.
inline lightcone::Circuit random_circuit(std::mt19937_64 &rng, std::size_t n, std::size_t size,
                                         const std::vector<lightcone::GateKind> &kinds = {
                                             lightcone::GateKind::H, lightcone::GateKind::RX, lightcone::GateKind::RY,
                                             lightcone::GateKind::RZ, lightcone::GateKind::CNOT,
                                             lightcone::GateKind::CRY, lightcone::GateKind::XX}) {
    using namespace lightcone;
    std::vector<Gate> gates;
    for (std::size_t k = 0; k < size; ++k) {
        GateKind kind = kinds[rng() % kinds.size()];
        if (n < 2 && gate_arity(kind) == 2) {
            kind = GateKind::RY;
        }
        Qubit a = static_cast<Qubit>(rng() % n);
        Qubit b = n < 2 ? 0 : static_cast<Qubit>((a + 1 + rng() % (n - 1)) % n);
        Gate g{kind, {a, gate_arity(kind) == 2 ? b : 0}, {}};
        if (gate_has_angle(kind)) {
            g.angle = Angle::literal(random_angle(rng));
        }
        gates.push_back(g);
    }
    return build_circuit(n, gates);
}

/// Random non-identity Pauli string on n qubits with at most `max_weight` letters.
inline lightcone::PauliString random_pauli(std::mt19937_64 &rng, std::size_t n, std::size_t max_weight = 3) {
    using namespace lightcone;
    std::vector<std::pair<Qubit, Pauli>> letters;
    std::size_t weight = 1 + rng() % std::min(n, max_weight);
    std::vector<Qubit> qs(n);
    for (std::size_t q = 0; q < n; ++q) {
        qs[q] = static_cast<Qubit>(q);
    }
    std::shuffle(qs.begin(), qs.end(), rng);
    for (std::size_t k = 0; k < weight; ++k) {
        letters.emplace_back(qs[k], static_cast<Pauli>(1 + rng() % 3));
    }
    return PauliString::from_letters(letters);
}

}  // namespace testing_support
