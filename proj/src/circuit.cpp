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

#include "lightcone/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "lightcone/error.hpp"

namespace lightcone {

Angle Angle::literal(double radians) {
    return Angle{"", 1.0, radians};
}

Angle Angle::param(std::string name, double scale, double offset) {
    return Angle{std::move(name), scale, offset};
}

double Angle::value() const {
    if (!is_literal()) {
        throw ValidationError("angle '" + format_angle(*this) + "' is symbolic; bind it first");
    }
    return offset;
}

double Angle::evaluate(const ParamVector &params) const {
    if (is_literal()) {
        return offset;
    }
    auto it = params.find(symbol);
    if (it == params.end()) {
        throw ValidationError("missing value for parameter '" + symbol + "'");
    }
    return scale * it->second + offset;
}

Angle Angle::scaled(double factor) const {
    if (is_literal()) {
        return literal(offset * factor);
    }
    return Angle{symbol, scale * factor, offset * factor};
}

Angle Angle::shifted(double radians) const {
    Angle a = *this;
    a.offset += radians;
    return a;
}

std::optional<Angle> add_angles(const Angle &a, const Angle &b) {
    if (a.is_literal()) {
        return b.shifted(a.offset);
    }
    if (b.is_literal()) {
        return a.shifted(b.offset);
    }
    if (a.symbol != b.symbol) {
        return std::nullopt;
    }
    double scale = a.scale + b.scale;
    if (scale == 0.0) {
        return Angle::literal(a.offset + b.offset);
    }
    return Angle{a.symbol, scale, a.offset + b.offset};
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string format_angle(const Angle &angle) {
    if (angle.is_literal()) {
        return format_double(angle.offset);
    }
    std::string out;
    if (angle.scale == -1.0) {
        out = "-" + angle.symbol;
    } else if (angle.scale != 1.0) {
        out = format_double(angle.scale) + "*" + angle.symbol;
    } else {
        out = angle.symbol;
    }
    if (angle.offset > 0.0) {
        out += "+" + format_double(angle.offset);
    } else if (angle.offset < 0.0) {
        out += format_double(angle.offset);
    }
    return out;
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::RX:
            return "RX";
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CRY:
            return "CRY";
        case GateKind::XX:
            return "XX";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (GateKind k : {GateKind::H, GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CNOT, GateKind::CRY,
                       GateKind::XX}) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CRY:
        case GateKind::XX:
            return 2;
        default:
            return 1;
    }
}

bool gate_has_angle(GateKind kind) {
    return kind != GateKind::H && kind != GateKind::CNOT;
}

bool is_native(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::XX;
}

bool is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool Gate::acts_on(Qubit q) const {
    for (Qubit t : targets()) {
        if (t == q) {
            return true;
        }
    }
    return false;
}

Gate Gate::h(Qubit q) {
    return Gate{GateKind::H, {q, 0}, {}};
}
Gate Gate::rx(Qubit q, Angle angle) {
    return Gate{GateKind::RX, {q, 0}, std::move(angle)};
}
Gate Gate::ry(Qubit q, Angle angle) {
    return Gate{GateKind::RY, {q, 0}, std::move(angle)};
}
Gate Gate::rz(Qubit q, Angle angle) {
    return Gate{GateKind::RZ, {q, 0}, std::move(angle)};
}
Gate Gate::rotation(GateKind axis, Qubit q, Angle angle) {
    return Gate{axis, {q, 0}, std::move(angle)};
}
Gate Gate::cnot(Qubit control, Qubit target) {
    return Gate{GateKind::CNOT, {control, target}, {}};
}
Gate Gate::cry(Qubit control, Qubit target, Angle angle) {
    return Gate{GateKind::CRY, {control, target}, std::move(angle)};
}
Gate Gate::xx(Qubit a, Qubit b, Angle angle) {
    return Gate{GateKind::XX, {a, b}, std::move(angle)};
}

std::string to_string(const Gate &gate) {
    std::string out(gate_name(gate.kind));
    if (gate_has_angle(gate.kind)) {
        out += "(" + format_angle(gate.angle) + ")";
    }
    for (Qubit q : gate.targets()) {
        out += " " + std::to_string(q);
    }
    return out;
}

namespace {

void validate_gate(const Gate &gate, std::size_t n_qubits, std::size_t index) {
    auto where = [&] { return "gate " + std::to_string(index) + " (" + to_string(gate) + ")"; };
    for (Qubit q : gate.targets()) {
        if (q >= n_qubits) {
            throw ValidationError(where() + ": qubit " + std::to_string(q) + " out of range for " +
                                  std::to_string(n_qubits) + " qubits");
        }
    }
    if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw ValidationError(where() + ": two-qubit gate needs distinct qubits");
    }
    if (gate.arity() == 1 && gate.qubits[1] != 0) {
        throw ValidationError(where() + ": single-qubit gate given a second qubit");
    }
    if (!gate_has_angle(gate.kind) && gate.angle != Angle{}) {
        throw ValidationError(where() + ": gate takes no angle");
    }
}

}  // namespace

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates) : n_qubits_(n_qubits), gates_(std::move(gates)) {
    if (n_qubits_ == 0) {
        throw ValidationError("circuit needs at least one qubit");
    }
    std::set<std::string> seen;
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        validate_gate(gates_[k], n_qubits_, k);
        const Angle &a = gates_[k].angle;
        if (gate_has_angle(gates_[k].kind) && !a.is_literal() && seen.insert(a.symbol).second) {
            parameters_.push_back(a.symbol);
        }
    }
}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates, std::vector<std::string> parameters)
    : Circuit(n_qubits, std::move(gates)) {
    std::set<std::string> declared(parameters.begin(), parameters.end());
    if (declared.size() != parameters.size()) {
        throw ValidationError("duplicate parameter declaration");
    }
    std::set<std::string> used(parameters_.begin(), parameters_.end());
    for (const auto &p : used) {
        if (!declared.count(p)) {
            throw ValidationError("parameter '" + p + "' is referenced but not declared");
        }
    }
    for (const auto &p : declared) {
        if (!used.count(p)) {
            throw ValidationError("parameter '" + p + "' is declared but never used");
        }
    }
    parameters_ = std::move(parameters);
}

std::size_t Circuit::depth() const {
    std::vector<std::size_t> level(n_qubits_, 0);
    std::size_t depth = 0;
    for (const Gate &g : gates_) {
        std::size_t l = 0;
        for (Qubit q : g.targets()) {
            l = std::max(l, level[q]);
        }
        ++l;
        for (Qubit q : g.targets()) {
            level[q] = l;
        }
        depth = std::max(depth, l);
    }
    return depth;
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate &g) { return g.kind == kind; }));
}

std::size_t Circuit::two_qubit_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.arity() == 2; }));
}

Circuit build_circuit(std::size_t n_qubits, std::vector<Gate> gates) {
    return Circuit(n_qubits, std::move(gates));
}

Circuit bind(const Circuit &circuit, const ParamVector &params, BindMode mode) {
    std::set<std::string> wanted(circuit.parameters().begin(), circuit.parameters().end());
    for (const auto &name : wanted) {
        if (!params.count(name)) {
            throw ValidationError("missing value for parameter '" + name + "'");
        }
    }
    if (mode == BindMode::Strict) {
        for (const auto &[name, value] : params) {
            if (!wanted.count(name)) {
                throw ValidationError("unknown parameter '" + name + "'");
            }
        }
    }
    std::vector<Gate> gates = circuit.gates();
    for (Gate &g : gates) {
        if (gate_has_angle(g.kind) && !g.angle.is_literal()) {
            g.angle = Angle::literal(g.angle.evaluate(params));
        }
    }
    return Circuit(circuit.n_qubits(), std::move(gates));
}

ParamVector make_params(const Circuit &circuit, std::span<const double> values) {
    if (values.size() != circuit.parameters().size()) {
        throw ValidationError("expected " + std::to_string(circuit.parameters().size()) + " parameter values, got " +
                              std::to_string(values.size()));
    }
    ParamVector p;
    for (std::size_t k = 0; k < values.size(); ++k) {
        p[circuit.parameters()[k]] = values[k];
    }
    return p;
}

}  // namespace lightcone
