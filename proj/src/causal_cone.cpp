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

#include "lightcone/causal_cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

#include "lightcone/error.hpp"

namespace lightcone {

CircuitDag::CircuitDag(Circuit circuit) : circuit_(std::move(circuit)) {
    const std::size_t n = circuit_.n_qubits();
    preds_.resize(node_count());
    succs_.resize(node_count());
    wire_preds_.resize(size());
    std::vector<std::size_t> last(n);
    for (Qubit q = 0; q < n; ++q) {
        last[q] = input_node(q);
    }
    auto link = [&](std::size_t u, std::size_t v) {
        if (std::find(preds_[v].begin(), preds_[v].end(), u) == preds_[v].end()) {
            preds_[v].push_back(u);
            succs_[u].push_back(v);
        }
    };
    for (std::size_t k = 0; k < size(); ++k) {
        for (Qubit q : circuit_[k].targets()) {
            wire_preds_[k].emplace_back(q, last[q]);
            link(last[q], k);
            last[q] = k;
        }
    }
    for (Qubit q = 0; q < n; ++q) {
        link(last[q], output_node(q));
    }
}

std::size_t CircuitDag::wire_predecessor(std::size_t gate, Qubit q) const {
    for (auto [wire, node] : wire_preds_.at(gate)) {
        if (wire == q) {
            return node;
        }
    }
    throw ValidationError("gate " + std::to_string(gate) + " does not act on qubit " + std::to_string(q));
}

CircuitDag build_dag(const Circuit &circuit) {
    return CircuitDag(circuit);
}

namespace {

void check_support(const Circuit &circuit, std::span<const Qubit> support) {
    for (Qubit q : support) {
        if (q >= circuit.n_qubits()) {
            throw ValidationError("qubit " + std::to_string(q) + " not in a " + std::to_string(circuit.n_qubits()) +
                                  "-qubit circuit");
        }
    }
}

}  // namespace

GateSet light_cone(const CircuitDag &dag, std::span<const Qubit> support) {
    check_support(dag.circuit(), support);
    std::vector<bool> active(dag.circuit().n_qubits(), false);
    for (Qubit q : support) {
        active[q] = true;
    }
    GateSet cone;
    for (std::size_t k = dag.size(); k-- > 0;) {
        const Gate &g = dag.circuit()[k];
        auto t = g.targets();
        if (std::any_of(t.begin(), t.end(), [&](Qubit q) { return active[q]; })) {
            cone.push_back(k);
            for (Qubit q : t) {
                active[q] = true;
            }
        }
    }
    std::reverse(cone.begin(), cone.end());
    return cone;
}

namespace {

constexpr std::size_t kMaxTrackedStrings = std::size_t{1} << 16;

bool near_multiple(double angle, double period) {
    double r = std::remainder(angle, period);
    return std::abs(r) < 1e-12;
}

struct Rotation {
    PauliString generator;
    /// Effective angle: exp(-i angle/2 generator).
    Angle angle;
};

/// One step of the backward sweep: a Clifford gate, a set of commuting rotations, or a fused block.
struct Unit {
    std::vector<std::size_t> gates;
    enum Kind { Hadamard, Cnot, Rotations } kind = Rotations;
    Qubit a = 0;
    Qubit b = 0;
    std::vector<Rotation> rotations;
    /// Literal period after which the whole unit is the identity up to phase; 0 when symbolic.
    bool trivially_identity = false;
};

PauliString product(const PauliString &p, const PauliString &q) {
    return PauliString{p.x ^ q.x, p.z ^ q.z};
}

std::optional<Unit> fused_block(const Circuit &circuit, std::size_t open, std::vector<bool> &consumed) {
    const Gate &first = circuit[open];
    if (first.kind != GateKind::CNOT) {
        return std::nullopt;
    }
    const Qubit c = first.qubits[0];
    const Qubit t = first.qubits[1];
    std::vector<std::size_t> inner;
    std::optional<GateKind> axis;
    for (std::size_t k = open + 1; k < circuit.size(); ++k) {
        const Gate &g = circuit[k];
        if (!g.acts_on(c) && !g.acts_on(t)) {
            continue;
        }
        if (g.kind == GateKind::CNOT && g.qubits[0] == c && g.qubits[1] == t) {
            if (inner.empty()) {
                return std::nullopt;
            }
            Unit u;
            u.kind = Unit::Rotations;
            u.gates.push_back(open);
            u.gates.insert(u.gates.end(), inner.begin(), inner.end());
            u.gates.push_back(k);
            Angle total = Angle::literal(0.0);
            bool affine = true;
            for (std::size_t j : inner) {
                auto s = add_angles(total, circuit[j].angle);
                if (!s) {
                    affine = false;
                    break;
                }
                total = *s;
            }
            PauliString p = PauliString::single(t, *axis == GateKind::RX   ? Pauli::X
                                                   : *axis == GateKind::RY ? Pauli::Y
                                                                           : Pauli::Z);
            // CNOT P_t CNOT: Z_t -> Z_c Z_t, Y_t -> Z_c Y_t, X_t -> X_t.
            if (*axis != GateKind::RX) {
                p.z |= std::uint64_t{1} << c;
            }
            u.rotations.push_back({p, affine ? total : Angle::param("?")});
            u.trivially_identity = affine && total.is_literal() && near_multiple(total.value(), 2 * std::numbers::pi);
            for (std::size_t j : u.gates) {
                consumed[j] = true;
            }
            return u;
        }
        if (g.arity() == 1 && g.qubits[0] == t && is_rotation(g.kind) && (!axis || *axis == g.kind)) {
            axis = g.kind;
            inner.push_back(k);
            continue;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

Unit single_unit(const Circuit &circuit, std::size_t k) {
    const Gate &g = circuit[k];
    Unit u;
    u.gates = {k};
    u.a = g.qubits[0];
    u.b = g.qubits[1];
    switch (g.kind) {
        case GateKind::H:
            u.kind = Unit::Hadamard;
            break;
        case GateKind::CNOT:
            u.kind = Unit::Cnot;
            break;
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ: {
            Pauli p = g.kind == GateKind::RX ? Pauli::X : g.kind == GateKind::RY ? Pauli::Y : Pauli::Z;
            u.rotations.push_back({PauliString::single(u.a, p), g.angle});
            u.trivially_identity = g.angle.is_literal() && near_multiple(g.angle.value(), 2 * std::numbers::pi);
            break;
        }
        case GateKind::XX: {
            u.rotations.push_back({PauliString::from_letters({{u.a, Pauli::X}, {u.b, Pauli::X}}), g.angle});
            u.trivially_identity = g.angle.is_literal() && near_multiple(g.angle.value(), 2 * std::numbers::pi);
            break;
        }
        case GateKind::CRY: {
            // CRY(t) = exp(-i t/4 Y_b) exp(+i t/4 Z_a Y_b).
            u.rotations.push_back({PauliString::single(u.b, Pauli::Y), g.angle.scaled(0.5)});
            u.rotations.push_back({PauliString::from_letters({{u.a, Pauli::Z}, {u.b, Pauli::Y}}), g.angle.scaled(-0.5)});
            u.trivially_identity = g.angle.is_literal() && near_multiple(g.angle.value(), 4 * std::numbers::pi);
            break;
        }
    }
    return u;
}

/// Units in forward order; fused blocks are placed at the position of their closing CNOT.
std::vector<Unit> build_units(const Circuit &circuit) {
    std::vector<bool> consumed(circuit.size(), false);
    std::vector<std::pair<std::size_t, Unit>> placed;
    for (std::size_t k = 0; k < circuit.size(); ++k) {
        if (consumed[k]) {
            continue;
        }
        if (auto block = fused_block(circuit, k, consumed)) {
            placed.emplace_back(block->gates.back(), std::move(*block));
            continue;
        }
        placed.emplace_back(k, single_unit(circuit, k));
    }
    std::stable_sort(placed.begin(), placed.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    std::vector<Unit> units;
    for (auto &[pos, u] : placed) {
        units.push_back(std::move(u));
    }
    return units;
}

bool unit_commutes(const Unit &u, const PauliString &s) {
    switch (u.kind) {
        case Unit::Hadamard:
            return !((s.x | s.z) >> u.a & 1);
        case Unit::Cnot:
            return !(s.x >> u.a & 1) && !(s.z >> u.b & 1);
        case Unit::Rotations:
            if (u.trivially_identity) {
                return true;
            }
            return std::all_of(u.rotations.begin(), u.rotations.end(),
                               [&](const Rotation &r) { return s.commutes_with(r.generator); });
    }
    return false;
}

void propagate(const Unit &u, std::vector<PauliString> &set) {
    switch (u.kind) {
        case Unit::Hadamard: {
            const std::uint64_t bit = std::uint64_t{1} << u.a;
            for (PauliString &s : set) {
                std::uint64_t xb = s.x & bit;
                std::uint64_t zb = s.z & bit;
                s.x = (s.x & ~bit) | zb;
                s.z = (s.z & ~bit) | xb;
            }
            break;
        }
        case Unit::Cnot: {
            for (PauliString &s : set) {
                s.x ^= ((s.x >> u.a) & 1) << u.b;
                s.z ^= ((s.z >> u.b) & 1) << u.a;
            }
            break;
        }
        case Unit::Rotations: {
            for (const Rotation &r : u.rotations) {
                if (r.angle.is_literal() && near_multiple(r.angle.value(), std::numbers::pi)) {
                    continue;
                }
                std::size_t n = set.size();
                for (std::size_t k = 0; k < n; ++k) {
                    if (!set[k].commutes_with(r.generator)) {
                        set.push_back(product(set[k], r.generator));
                    }
                }
            }
            break;
        }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

}  // namespace

GateSet past_causal_cone(const Circuit &circuit, std::span<const PauliString> observables) {
    for (const PauliString &p : observables) {
        if (p.support_mask() >> circuit.n_qubits()) {
            throw ValidationError("observable " + to_string(p) + " outside " + std::to_string(circuit.n_qubits()) +
                                  "-qubit circuit");
        }
    }
    std::vector<PauliString> set;
    for (const PauliString &p : observables) {
        if (!p.is_identity()) {
            set.push_back(p);
        }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());

    std::vector<Unit> units = build_units(circuit);
    GateSet cone;
    std::uint64_t wide = 0;
    bool widened = false;
    for (std::size_t i = units.size(); i-- > 0;) {
        const Unit &u = units[i];
        if (widened) {
            std::uint64_t touched = 0;
            for (std::size_t k : u.gates) {
                for (Qubit q : circuit[k].targets()) {
                    touched |= std::uint64_t{1} << q;
                }
            }
            if (touched & wide) {
                wide |= touched;
                cone.insert(cone.end(), u.gates.begin(), u.gates.end());
            }
            continue;
        }
        bool keep = std::any_of(set.begin(), set.end(), [&](const PauliString &s) { return !unit_commutes(u, s); });
        if (!keep) {
            continue;
        }
        cone.insert(cone.end(), u.gates.begin(), u.gates.end());
        propagate(u, set);
        if (set.size() > kMaxTrackedStrings) {
            widened = true;
            for (const PauliString &s : set) {
                wide |= s.support_mask();
            }
            set.clear();
        }
    }
    std::sort(cone.begin(), cone.end());
    return cone;
}

GateSet past_causal_cone(const Circuit &circuit, const PauliString &observable) {
    return past_causal_cone(circuit, std::span<const PauliString>(&observable, 1));
}

GateSet past_causal_cone(const CircuitDag &dag, std::span<const Qubit> support) {
    check_support(dag.circuit(), support);
    std::vector<PauliString> generators;
    for (Qubit q : support) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            generators.push_back(PauliString::single(q, p));
        }
    }
    return past_causal_cone(dag.circuit(), generators);
}

std::vector<Qubit> cone_qubits(const Circuit &circuit, const GateSet &cone) {
    std::set<Qubit> qs;
    for (std::size_t k : cone) {
        for (Qubit q : circuit.gates().at(k).targets()) {
            qs.insert(q);
        }
    }
    return {qs.begin(), qs.end()};
}

ReducedAnsatz restrict_circuit(const Circuit &circuit, const GateSet &cone, const PauliTerm &term) {
    std::vector<Qubit> qubits = cone_qubits(circuit, cone);
    for (Qubit q : term.support()) {
        if (q >= circuit.n_qubits()) {
            throw ValidationError("term " + to_string(term) + " outside circuit qubits");
        }
        qubits.push_back(q);
    }
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    if (qubits.empty()) {
        qubits.push_back(0);
    }
    QubitMap relabel;
    for (Qubit i = 0; i < qubits.size(); ++i) {
        relabel[qubits[i]] = i;
    }
    std::vector<Gate> gates;
    for (std::size_t k : cone) {
        Gate g = circuit[k];
        for (std::size_t j = 0; j < g.arity(); ++j) {
            g.qubits[j] = relabel.at(g.qubits[j]);
        }
        gates.push_back(g);
    }
    return ReducedAnsatz{term, relabel_term(term, relabel), Circuit(qubits.size(), std::move(gates)), relabel, cone, cone};
}

ReducedAnsatz reduce_ansatz(const Circuit &circuit, const PauliTerm &term) {
    return restrict_circuit(circuit, past_causal_cone(circuit, term.string), term);
}

std::vector<Qubit> ReducedCircuit::original_qubits() const {
    std::vector<Qubit> out;
    for (auto [orig, reduced] : relabel) {
        out.push_back(orig);
    }
    return out;
}

ReducedSet reduced_set(const Circuit &circuit, const Hamiltonian &h) {
    if (h.n_qubits() != circuit.n_qubits()) {
        throw ValidationError("Hamiltonian has " + std::to_string(h.n_qubits()) + " qubits, circuit has " +
                              std::to_string(circuit.n_qubits()));
    }
    std::vector<PauliTerm> terms = h.measured_terms();
    // Support classes share one circuit.
    std::vector<std::uint64_t> class_support;
    std::vector<GateSet> class_cone;
    std::vector<std::size_t> term_class;
    std::vector<GateSet> own_cones;
    for (const PauliTerm &t : terms) {
        auto it = std::find(class_support.begin(), class_support.end(), t.string.support_mask());
        std::size_t cls = static_cast<std::size_t>(it - class_support.begin());
        if (it == class_support.end()) {
            class_support.push_back(t.string.support_mask());
            class_cone.emplace_back();
        }
        const GateSet &own = own_cones.emplace_back(past_causal_cone(circuit, t.string));
        GateSet merged;
        std::set_union(class_cone[cls].begin(), class_cone[cls].end(), own.begin(), own.end(),
                       std::back_inserter(merged));
        class_cone[cls] = std::move(merged);
        term_class.push_back(cls);
    }

    ReducedSet out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const GateSet &cone = class_cone[term_class[k]];
        // Any term of the class fixes the register: all share one support.
        ReducedAnsatz entry = restrict_circuit(circuit, cone, terms[k]);
        entry.term_cone = own_cones[k];
        auto it = std::find_if(out.circuits.begin(), out.circuits.end(), [&](const ReducedCircuit &rc) {
            return rc.cone_gates == cone && rc.relabel == entry.relabel;
        });
        std::size_t idx = static_cast<std::size_t>(it - out.circuits.begin());
        if (it == out.circuits.end()) {
            out.circuits.push_back(ReducedCircuit{entry.circuit, cone, entry.relabel, {}});
        }
        out.circuits[idx].terms.push_back(terms[k]);
        out.term_circuit.push_back(idx);
        out.entries.push_back(std::move(entry));
    }
    return out;
}

}  // namespace lightcone
