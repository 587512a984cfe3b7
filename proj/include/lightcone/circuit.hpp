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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lightcone {

using Qubit = std::uint32_t;

/// Parameter values by name, in radians.
using ParamVector = std::map<std::string, double>;

/// A gate angle: either a literal (symbol empty, value = offset) or the affine
/// form `scale * symbol + offset`.
struct Angle {
    std::string symbol;
    double scale = 1.0;
    double offset = 0.0;

    static Angle literal(double radians);
    static Angle param(std::string name, double scale = 1.0, double offset = 0.0);

    bool is_literal() const {
        return symbol.empty();
    }
    /// Literal value. Throws ValidationError on a symbolic angle.
    double value() const;
    /// Resolves the angle against `params`. Throws ValidationError if the symbol is missing.
    double evaluate(const ParamVector &params) const;

    Angle scaled(double factor) const;
    Angle negated() const {
        return scaled(-1.0);
    }
    Angle shifted(double radians) const;

    bool operator==(const Angle &) const = default;
};

/// Sum of two angles when it is still affine in at most one symbol.
std::optional<Angle> add_angles(const Angle &a, const Angle &b);

std::string format_angle(const Angle &angle);

enum class GateKind : std::uint8_t { H, RX, RY, RZ, CNOT, CRY, XX };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);
/// True for the trapped-ion native set {RX, RY, RZ, XX}.
bool is_native(GateKind kind);
bool is_rotation(GateKind kind);

/// One gate application. For CNOT and CRY, qubits[0] is the control and qubits[1] the target.
/// Conventions: RP(t) = exp(-i t P / 2), XX(t) = exp(-i t X(x)X / 2), CRY applies RY on the
/// target when the control is |1>.
struct Gate {
    GateKind kind = GateKind::H;
    std::array<Qubit, 2> qubits{};
    Angle angle{};

    std::size_t arity() const {
        return gate_arity(kind);
    }
    std::span<const Qubit> targets() const {
        return {qubits.data(), arity()};
    }
    bool acts_on(Qubit q) const;

    static Gate h(Qubit q);
    static Gate rx(Qubit q, Angle angle);
    static Gate ry(Qubit q, Angle angle);
    static Gate rz(Qubit q, Angle angle);
    static Gate rotation(GateKind axis, Qubit q, Angle angle);
    static Gate cnot(Qubit control, Qubit target);
    static Gate cry(Qubit control, Qubit target, Angle angle);
    static Gate xx(Qubit a, Qubit b, Angle angle);

    bool operator==(const Gate &) const = default;
};

/// Formats a gate in the circuit text syntax, e.g. `CRY(lambda1) 1 2`.
std::string to_string(const Gate &gate);

/// An ordered, validated gate list over `n_qubits` qubits. Immutable after construction.
class Circuit {
   public:
    /// Validates the gate list and infers the parameter list in order of first reference.
    Circuit(std::size_t n_qubits, std::vector<Gate> gates);
    /// As above, but also checks that `parameters` lists exactly the referenced symbols.
    Circuit(std::size_t n_qubits, std::vector<Gate> gates, std::vector<std::string> parameters);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const std::vector<std::string> &parameters() const {
        return parameters_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }
    const Gate &operator[](std::size_t k) const {
        return gates_[k];
    }

    /// True when every angle is a literal.
    bool is_bound() const {
        return parameters_.empty();
    }
    /// ASAP layer count.
    std::size_t depth() const;
    std::size_t count(GateKind kind) const;
    std::size_t two_qubit_count() const;

    bool operator==(const Circuit &) const = default;

   private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::vector<std::string> parameters_;
};

Circuit build_circuit(std::size_t n_qubits, std::vector<Gate> gates);

enum class BindMode {
    /// `params` must name exactly the circuit's parameters.
    Strict,
    /// Extra names are ignored (binding a reduced circuit with the full ansatz parameters).
    IgnoreExtra,
};

Circuit bind(const Circuit &circuit, const ParamVector &params, BindMode mode = BindMode::Strict);

/// Positional form of a ParamVector, ordered by `circuit.parameters()`.
ParamVector make_params(const Circuit &circuit, std::span<const double> values);

std::string serialize(const Circuit &circuit);
Circuit parse_circuit(std::string_view text);

}  // namespace lightcone
