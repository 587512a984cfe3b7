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
#include <span>
#include <string>
#include <vector>

#include "lightcone/causal_cone.hpp"
#include "lightcone/pauli.hpp"

namespace lightcone {

enum class Strategy {
    /// Every term measured on the full ansatz.
    Full,
    /// Every term measured on its own reduced circuit.
    ReducedAccuracy,
    /// Fewest reduced circuits that support every term.
    ReducedCover,
};

std::string strategy_name(Strategy s);
/// Throws ConfigError on an unknown name.
Strategy strategy_from_name(const std::string &name);

struct SubHamiltonian {
    /// Index into ReducedSet::circuits.
    std::size_t circuit = 0;
    /// Non-identity terms measurable from the circuit.
    std::vector<PauliTerm> terms;
    /// Terms this circuit reports; a subset of `terms`.
    std::vector<PauliTerm> owned;
};

/// True when the term's own cone lies inside the circuit's cone and its support inside the circuit's qubits.
bool measurable_on(const ReducedAnsatz &entry, const ReducedCircuit &circuit);

/// One sub-Hamiltonian per distinct circuit; each term is owned by its own cone circuit.
std::vector<SubHamiltonian> group_all(const ReducedSet &reduced);

/// Minimum-cardinality set of circuits measuring every term (exact branch and bound up to 64 terms and 48
/// circuits, greedy beyond). Each term is owned by the shallowest selected circuit supporting it, ties broken by
/// fewer qubits, then lower index.
std::vector<SubHamiltonian> minimal_cover(const ReducedSet &reduced);

struct RoundingPolicy {
    /// Prescribed counts are rounded to the nearest multiple of this.
    std::uint64_t multiple = 50;
    /// Smallest prescribed count for a non-exempt row.
    std::uint64_t floor = 500;
    /// Rows with a raw count below this keep ceil(raw), at least 1.
    double exempt_below = 10.0;
};

struct ShotEstimate {
    /// T: measurable non-identity terms of the sub-Hamiltonian.
    std::size_t term_count = 0;
    double h_max = 0.0;
    double epsilon = 0.0;
    /// T h_max^2 / epsilon^2.
    double raw = 0.0;
    /// ceil(raw), at least 1.
    std::uint64_t estimated = 0;
    /// Count after the rounding policy.
    std::uint64_t prescribed = 0;
    /// Separate measurements run on this circuit (owned terms).
    std::size_t measured_terms = 0;
};

/// Throws ValidationError for epsilon <= 0 or a sub-Hamiltonian without terms.
ShotEstimate estimate_shots(const SubHamiltonian &sub, double epsilon, const RoundingPolicy &policy = {});

/// Per-circuit target error: the given value, or a total error split evenly in quadrature over the circuits.
enum class EpsilonMode { PerCircuit, TotalSplit };

struct ShotPlan {
    Strategy strategy = Strategy::ReducedCover;
    std::vector<SubHamiltonian> groups;
    std::vector<ShotEstimate> budgets;
    std::uint64_t total_estimated = 0;
    std::uint64_t total_prescribed = 0;
    /// Every term measured separately on the full ansatz.
    std::uint64_t baseline = 0;
};

/// Groups (accuracy or cover strategy) and budgets the reduced set. `baseline_shots` sizes the unreduced reference.
ShotPlan plan_shots(const ReducedSet &reduced, Strategy strategy, double epsilon, EpsilonMode mode,
                    std::uint64_t baseline_shots, const RoundingPolicy &policy = {});

/// Sum of shots times measured terms.
std::uint64_t total_budget(std::span<const ShotEstimate> budgets, bool prescribed = false);

}  // namespace lightcone
