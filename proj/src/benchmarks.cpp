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

#include "lightcone/benchmarks.hpp"

#include <numbers>

#include "lightcone/error.hpp"

namespace lightcone {

Circuit deuteron_ansatz() {
    return Circuit(4,
                   {
                       Gate::rx(0, Angle::literal(std::numbers::pi)),
                       Gate::ry(1, Angle::param("phi")),
                       Gate::cnot(1, 0),
                       Gate::cry(1, 2, Angle::param("lambda1")),
                       Gate::cnot(2, 1),
                       Gate::cry(2, 3, Angle::param("lambda2")),
                       Gate::cnot(3, 2),
                   },
                   {"phi", "lambda1", "lambda2"});
}

Circuit qaoa_ansatz(const Graph &graph, std::size_t layers) {
    if (layers == 0) {
        throw ValidationError("QAOA needs at least one layer");
    }
    std::vector<Gate> gates;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < graph.n_vertices(); ++v) {
        gates.push_back(Gate::h(static_cast<Qubit>(v)));
    }
    for (std::size_t layer = 1; layer <= layers; ++layer) {
        std::string suffix = layers == 1 ? "" : std::to_string(layer);
        std::string gamma = "gamma" + suffix;
        std::string beta = "beta" + suffix;
        names.push_back(gamma);
        names.push_back(beta);
        for (auto [u, v] : graph.edges()) {
            Qubit a = static_cast<Qubit>(u);
            Qubit b = static_cast<Qubit>(v);
            gates.push_back(Gate::cnot(a, b));
            gates.push_back(Gate::rz(b, Angle::param(gamma, 0.5)));
            gates.push_back(Gate::cnot(a, b));
        }
        for (std::size_t v = 0; v < graph.n_vertices(); ++v) {
            gates.push_back(Gate::rx(static_cast<Qubit>(v), Angle::param(beta)));
        }
    }
    if (graph.edges().empty()) {
        throw ValidationError("QAOA needs at least one edge");
    }
    return Circuit(graph.n_vertices(), std::move(gates), std::move(names));
}

std::optional<Problem> builtin_problem(const std::string &name) {
    if (name == "deuteron") {
        return Problem{"deuteron",
                       deuteron_ansatz(),
                       deuteron_hamiltonian(),
                       {{"phi", 0.858}, {"lambda1", 0.958}, {"lambda2", 0.758}},
                       0.971};
    }
    if (name == "dragon") {
        Graph g = dragon_graph();
        return Problem{"dragon", qaoa_ansatz(g), maxcut_hamiltonian(g), {{"gamma", 1.358}, {"beta", 2.462}}, 0.943};
    }
    return std::nullopt;
}

std::vector<std::string> builtin_problem_names() {
    return {"deuteron", "dragon"};
}

}  // namespace lightcone
