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

#include <optional>
#include <string>
#include <vector>

#include "lightcone/circuit.hpp"
#include "lightcone/pauli.hpp"

namespace lightcone {

/// Four-qubit unitary coupled-cluster ansatz for the deuteron, parameters [phi, lambda1, lambda2].
Circuit deuteron_ansatz();

/// Depth-p QAOA for MAXCUT on `graph`. Each edge (i, j) is CNOT(i,j) RZ(gamma/2) CNOT(i,j); the mixer is RX(beta).
/// Parameters are [gamma, beta] for p = 1 and [gamma1, beta1, ..., gammap, betap] otherwise.
Circuit qaoa_ansatz(const Graph &graph, std::size_t layers = 1);

struct Problem {
    std::string name;
    Circuit ansatz;
    Hamiltonian hamiltonian;
    /// Reference parameter point (in-silico optimum).
    ParamVector reference_params;
    /// Joint readout fidelity of the full register on the reference hardware.
    double readout_fidelity = 1.0;
};

/// `deuteron` or `dragon`; nullopt otherwise.
std::optional<Problem> builtin_problem(const std::string &name);
std::vector<std::string> builtin_problem_names();

}  // namespace lightcone
