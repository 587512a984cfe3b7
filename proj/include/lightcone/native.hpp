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

#include <Eigen/Dense>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "lightcone/circuit.hpp"

namespace lightcone {

/// Canonical-to-native identity on qubits {0, 1}; angles in the pattern and replacement are affine in the symbol `t`.
struct RewriteRule {
    std::string name;
    std::size_t n_qubits = 2;
    std::vector<Gate> pattern;
    std::vector<Gate> replacement;
};

const std::vector<RewriteRule> &rewrite_rules();
/// Looks a rule up by name. Throws ValidationError if absent.
const RewriteRule &rewrite_rule(const std::string &name);

/// Checks pattern == replacement up to global phase at `samples` random values of `t`.
bool verify_rule(const RewriteRule &rule, std::mt19937_64 &rng, int samples = 20, double tol = 1e-10);

/// Gate-by-gate translation: H, CNOT and CRY are replaced independently.
Circuit translate_gates(const Circuit &circuit);

/// Translation that also rewrites CNOT(c,t) rotations(t) CNOT(c,t) blocks into a single XX.
Circuit to_native(const Circuit &circuit);

struct PeepholeOptions {
    /// Drops trailing RZ gates; preserves Z-basis statistics only, not the unitary.
    bool absorb_final_rz = false;
};

/// Fixed point of: merging commuting-adjacent rotations with the same generator, dropping literal angles that are
/// multiples of 2 pi, and wrapping literal angles into (-pi, pi].
Circuit peephole_optimize(const Circuit &circuit, const PeepholeOptions &options = {});

/// Level 0: translate_gates. Level 1: to_native followed by peephole_optimize.
Circuit compile_native(const Circuit &circuit, int opt_level = 1);

struct GateCounts {
    std::size_t xx = 0;
    std::size_t rx = 0;
    std::size_t ry = 0;
    std::size_t rz = 0;
    std::size_t other = 0;
    std::size_t total = 0;
};

GateCounts count_gates(const Circuit &circuit);

inline constexpr std::size_t kMaxUnitaryQubits = 10;

/// Dense unitary of a bound circuit (little-endian). Throws GuardError above kMaxUnitaryQubits.
Eigen::MatrixXcd circuit_unitary(const Circuit &circuit);

/// True iff ||U1 - e^{i phi} U2||_F <= tol, with the phase taken from the largest-magnitude entry of U2.
bool unitary_equiv(const Circuit &a, const Circuit &b, double tol = 1e-9);

}  // namespace lightcone
