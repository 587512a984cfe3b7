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

#include "lightcone/simulator.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "lightcone/error.hpp"

namespace lightcone {

namespace {

constexpr Amplitude kI{0.0, 1.0};

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw ValidationError("state needs at least one qubit");
    }
    if (n_qubits > kMaxSimulatedQubits) {
        throw GuardError("statevector limited to " + std::to_string(kMaxSimulatedQubits) + " qubits, got " +
                         std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::apply_1q(Qubit q, const Amplitude (&m)[2][2]) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            continue;
        }
        Amplitude a0 = amps_[i];
        Amplitude a1 = amps_[i | bit];
        amps_[i] = m[0][0] * a0 + m[0][1] * a1;
        amps_[i | bit] = m[1][0] * a0 + m[1][1] * a1;
    }
}

void StateVector::apply(const Gate &gate) {
    for (Qubit q : gate.targets()) {
        if (q >= n_qubits_) {
            throw ValidationError("gate " + to_string(gate) + " outside " + std::to_string(n_qubits_) + " qubits");
        }
    }
    const Qubit q0 = gate.qubits[0];
    const Qubit q1 = gate.qubits[1];
    switch (gate.kind) {
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2;
            const Amplitude m[2][2] = {{r, r}, {r, -r}};
            apply_1q(q0, m);
            return;
        }
        case GateKind::RX: {
            double t = gate.angle.value() / 2;
            const Amplitude m[2][2] = {{std::cos(t), -kI * std::sin(t)}, {-kI * std::sin(t), std::cos(t)}};
            apply_1q(q0, m);
            return;
        }
        case GateKind::RY: {
            double t = gate.angle.value() / 2;
            const Amplitude m[2][2] = {{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}};
            apply_1q(q0, m);
            return;
        }
        case GateKind::RZ: {
            double t = gate.angle.value() / 2;
            const Amplitude m[2][2] = {{std::exp(-kI * t), 0.0}, {0.0, std::exp(kI * t)}};
            apply_1q(q0, m);
            return;
        }
        case GateKind::CNOT: {
            const std::size_t cb = std::size_t{1} << q0;
            const std::size_t tb = std::size_t{1} << q1;
            for (std::size_t i = 0; i < amps_.size(); ++i) {
                if ((i & cb) && !(i & tb)) {
                    std::swap(amps_[i], amps_[i | tb]);
                }
            }
            return;
        }
        case GateKind::CRY: {
            double t = gate.angle.value() / 2;
            double c = std::cos(t);
            double s = std::sin(t);
            const std::size_t cb = std::size_t{1} << q0;
            const std::size_t tb = std::size_t{1} << q1;
            for (std::size_t i = 0; i < amps_.size(); ++i) {
                if ((i & cb) && !(i & tb)) {
                    Amplitude a0 = amps_[i];
                    Amplitude a1 = amps_[i | tb];
                    amps_[i] = c * a0 - s * a1;
                    amps_[i | tb] = s * a0 + c * a1;
                }
            }
            return;
        }
        case GateKind::XX: {
            double t = gate.angle.value() / 2;
            Amplitude c = std::cos(t);
            Amplitude s = -kI * std::sin(t);
            const std::size_t flip = (std::size_t{1} << q0) | (std::size_t{1} << q1);
            for (std::size_t i = 0; i < amps_.size(); ++i) {
                std::size_t j = i ^ flip;
                if (i < j) {
                    Amplitude a = amps_[i];
                    Amplitude b = amps_[j];
                    amps_[i] = c * a + s * b;
                    amps_[j] = s * a + c * b;
                }
            }
            return;
        }
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.n_qubits() != n_qubits_) {
        throw ValidationError("circuit has " + std::to_string(circuit.n_qubits()) + " qubits, state has " +
                              std::to_string(n_qubits_));
    }
    for (const Gate &g : circuit.gates()) {
        apply(g);
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    if (p.support_mask() >> n_qubits_) {
        throw ValidationError("Pauli " + to_string(p) + " outside state");
    }
    const Amplitude phase = std::pow(kI, std::popcount(p.x & p.z));
    std::vector<Amplitude> out(amps_.size());
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        double sign = (std::popcount(b & p.z) & 1) ? -1.0 : 1.0;
        out[b ^ p.x] = phase * sign * amps_[b];
    }
    amps_.swap(out);
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Amplitude &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

StateVector simulate(const Circuit &circuit) {
    StateVector s(circuit.n_qubits());
    s.apply(circuit);
    return s;
}

double expectation(const StateVector &state, const PauliString &p) {
    if (p.support_mask() >> state.n_qubits()) {
        throw ValidationError("Pauli " + to_string(p) + " outside " + std::to_string(state.n_qubits()) + " qubits");
    }
    const auto &a = state.amplitudes();
    const Amplitude phase = std::pow(kI, std::popcount(p.x & p.z));
    Amplitude acc = 0.0;
    for (std::size_t b = 0; b < a.size(); ++b) {
        double sign = (std::popcount(b & p.z) & 1) ? -1.0 : 1.0;
        acc += std::conj(a[b ^ p.x]) * a[b] * sign;
    }
    return (phase * acc).real();
}

double expectation(const StateVector &state, const PauliTerm &term) {
    return expectation(state, term.string);
}

double energy(const StateVector &state, const Hamiltonian &h) {
    double e = 0.0;
    for (const PauliTerm &t : h.terms()) {
        e += t.is_identity() ? t.coefficient : t.coefficient * expectation(state, t.string);
    }
    return e;
}

std::vector<Gate> basis_change(const PauliString &p) {
    std::vector<Gate> out;
    for (Qubit q : p.support()) {
        Pauli letter = p.at(q);
        if (letter == Pauli::Y) {
            out.push_back(Gate::rz(q, Angle::literal(-std::numbers::pi / 2)));
        }
        if (letter != Pauli::Z) {
            out.push_back(Gate::h(q));
        }
    }
    return out;
}

}  // namespace lightcone
