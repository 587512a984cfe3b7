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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lightcone/circuit.hpp"
#include "lightcone/pauli.hpp"

namespace lightcone {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxSimulatedQubits = 24;

/// Dense state over n qubits, little-endian (qubit 0 is the least significant bit of the basis index).
class StateVector {
   public:
    /// |0...0>. Throws GuardError above kMaxSimulatedQubits.
    explicit StateVector(std::size_t n_qubits);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    const std::vector<Amplitude> &amplitudes() const {
        return amps_;
    }
    std::vector<Amplitude> &amplitudes() {
        return amps_;
    }

    /// Applies a bound gate. Throws ValidationError on a symbolic angle.
    void apply(const Gate &gate);
    void apply(const Circuit &circuit);
    /// Applies a Pauli operator (X/Y/Z on each support qubit), used for error injection.
    void apply_pauli(const PauliString &p);
    void apply_1q(Qubit q, const Amplitude (&m)[2][2]);

    double norm() const;
    std::vector<double> probabilities() const;

   private:
    std::size_t n_qubits_;
    std::vector<Amplitude> amps_;
};

/// U|0...0> for a bound circuit.
StateVector simulate(const Circuit &circuit);

/// <psi|P|psi>; the coefficient is not applied.
double expectation(const StateVector &state, const PauliString &p);
double expectation(const StateVector &state, const PauliTerm &term);
/// Weighted sum over all terms, identity included.
double energy(const StateVector &state, const Hamiltonian &h);

/// Gates rotating each support qubit into the Z basis: H for X, RZ(-pi/2) then H for Y.
std::vector<Gate> basis_change(const PauliString &p);

}  // namespace lightcone
