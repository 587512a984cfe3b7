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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lightcone/circuit.hpp"
#include "lightcone/pauli.hpp"

namespace lightcone {

using Rng = std::mt19937_64;

/// Row-stochastic single-qubit readout matrix: entry [prepared][measured].
struct ConfusionMatrix {
    std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};

    static ConfusionMatrix symmetric(double flip);
    /// Throws ValidationError unless entries lie in [0,1] and rows sum to 1.
    void validate() const;
};

/// Per-qubit flip probability q with (1 - q)^n equal to the joint fidelity.
double flip_from_joint_fidelity(double joint_fidelity, std::size_t n_qubits);

struct NoiseModel {
    /// Depolarizing probability after RX, RY and H.
    double p1 = 0.0;
    /// Depolarizing probability after XX, CNOT and CRY.
    double p2 = 0.0;
    /// RZ is virtual and noiseless unless this is set.
    double p_rz = 0.0;
    /// Readout matrix per measured qubit, keyed by circuit qubit. Missing qubits read out perfectly.
    std::map<Qubit, ConfusionMatrix> readout;

    static NoiseModel noiseless();
    /// 99.5% single-qubit and 98.5% two-qubit fidelities, symmetric readout flips matching `joint_fidelity`.
    static NoiseModel standard(std::size_t n_qubits, double joint_fidelity);

    bool has_gate_noise() const {
        return p1 > 0.0 || p2 > 0.0 || p_rz > 0.0;
    }
    bool has_readout_noise() const;
    double gate_error_probability(const Gate &g) const;
    void validate() const;
};

struct MeasurementRecord {
    std::string circuit_id;
    PauliTerm term;
    std::vector<Gate> basis_gates;
    std::uint64_t shots = 0;
    /// Raw bitstring counts over the full register (little-endian).
    std::map<std::uint64_t, std::uint64_t> counts;
    /// Parity estimate of the Pauli string (coefficient not applied).
    double estimate = 0.0;
    /// Symmetric Gaussian 1-sigma error, sqrt((1 - estimate^2) / shots).
    double std_error = 0.0;
    /// Wilson score interval (z = 1) mapped onto the parity scale.
    double ci_low = 0.0;
    double ci_high = 0.0;
    bool readout_corrected = false;

    bool operator==(const MeasurementRecord &) const = default;
};

struct SampleOptions {
    std::uint64_t shots = 1000;
    NoiseModel noise{};
    bool correct_readout = false;
};

/// Samples `term` on a bound circuit: appends the basis change, draws shots (trajectory noise after every gate, then
/// readout flips), and reduces to a parity estimate.
MeasurementRecord sample(const Circuit &circuit, const PauliTerm &term, const SampleOptions &options, Rng &rng);

/// Samples once and evaluates every string in `terms` from the same counts. All strings must be qubit-wise
/// compatible.
std::vector<MeasurementRecord> sample_setting(const Circuit &circuit, const std::vector<PauliTerm> &terms,
                                              const SampleOptions &options, Rng &rng);

/// Applies the inverse of the tensor product of `matrices` (matrices[k] acts on bit k of the index) to an empirical
/// distribution, clips negatives and renormalizes. Throws ValidationError on a singular matrix.
std::vector<double> correct_readout(const std::vector<double> &probabilities,
                                    const std::vector<ConfusionMatrix> &matrices);

/// Wilson score interval for a binomial proportion at `z` standard deviations.
std::pair<double, double> wilson_interval(double successes, double trials, double z = 1.0);

}  // namespace lightcone
