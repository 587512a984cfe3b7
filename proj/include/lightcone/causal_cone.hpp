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
#include <span>
#include <vector>

#include "lightcone/circuit.hpp"
#include "lightcone/pauli.hpp"

namespace lightcone {

/// Sorted gate positions.
using GateSet = std::vector<std::size_t>;

/// Gate dependency graph. Node k < size() is gate k; then one input and one output boundary node per qubit.
class CircuitDag {
   public:
    explicit CircuitDag(Circuit circuit);

    const Circuit &circuit() const {
        return circuit_;
    }
    std::size_t size() const {
        return circuit_.size();
    }
    std::size_t node_count() const {
        return size() + 2 * circuit_.n_qubits();
    }
    std::size_t input_node(Qubit q) const {
        return size() + q;
    }
    std::size_t output_node(Qubit q) const {
        return size() + circuit_.n_qubits() + q;
    }
    bool is_gate(std::size_t node) const {
        return node < size();
    }
    const std::vector<std::size_t> &predecessors(std::size_t node) const {
        return preds_[node];
    }
    const std::vector<std::size_t> &successors(std::size_t node) const {
        return succs_[node];
    }
    /// Node that last wrote wire `q` before gate `gate` (possibly the input boundary).
    std::size_t wire_predecessor(std::size_t gate, Qubit q) const;

   private:
    Circuit circuit_;
    std::vector<std::vector<std::size_t>> preds_;
    std::vector<std::vector<std::size_t>> succs_;
    std::vector<std::vector<std::pair<Qubit, std::size_t>>> wire_preds_;
};

CircuitDag build_dag(const Circuit &circuit);

/// Backward reachability from the output boundaries of `support`: a two-qubit gate pulls both of its wires into the
/// frontier. Throws ValidationError for an unknown qubit.
GateSet light_cone(const CircuitDag &dag, std::span<const Qubit> support);

/// Gates that can change the expectation of some operator supported on `support`.
GateSet past_causal_cone(const CircuitDag &dag, std::span<const Qubit> support);

/// Gates that can change the expectation of any of `observables`. Gates are swept backwards while tracking the
/// Pauli strings the Heisenberg-evolved observable can contain; a gate is retained when it fails to commute with
/// one of them. CNOT(c,t) rotations(t) CNOT(c,t) blocks are evaluated as one rotation.
GateSet past_causal_cone(const Circuit &circuit, std::span<const PauliString> observables);
GateSet past_causal_cone(const Circuit &circuit, const PauliString &observable);

/// Qubits touched by the gates in `cone`, ascending.
std::vector<Qubit> cone_qubits(const Circuit &circuit, const GateSet &cone);

struct ReducedAnsatz {
    /// Original term.
    PauliTerm term;
    /// `term` expressed on the reduced register.
    PauliTerm reduced_term;
    Circuit circuit;
    QubitMap relabel;
    /// Original gates kept in `circuit`.
    GateSet cone_gates;
    /// Cone of `term` alone; a subset of `cone_gates`.
    GateSet term_cone;
};

/// Restricts `circuit` to `cone` over the cone qubits plus the support of `term`, relabelled in ascending order.
ReducedAnsatz restrict_circuit(const Circuit &circuit, const GateSet &cone, const PauliTerm &term);

/// Reduced circuit measuring a single term.
ReducedAnsatz reduce_ansatz(const Circuit &circuit, const PauliTerm &term);

struct ReducedCircuit {
    Circuit circuit;
    GateSet cone_gates;
    QubitMap relabel;
    /// Original-label terms mapped to this circuit.
    std::vector<PauliTerm> terms;

    std::vector<Qubit> original_qubits() const;
};

struct ReducedSet {
    /// One entry per non-identity term, in Hamiltonian order; each holds its shared circuit.
    std::vector<ReducedAnsatz> entries;
    /// Distinct circuits in order of first use.
    std::vector<ReducedCircuit> circuits;
    /// entries[k] runs on circuits[term_circuit[k]].
    std::vector<std::size_t> term_circuit;
};

/// Terms with the same support share one circuit, built from the union of their cones. Circuits with identical cone
/// gate sets are merged.
ReducedSet reduced_set(const Circuit &circuit, const Hamiltonian &h);

}  // namespace lightcone
