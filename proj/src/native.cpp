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

#include "lightcone/native.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "lightcone/error.hpp"
#include "lightcone/pauli.hpp"
#include "lightcone/simulator.hpp"

namespace lightcone {

namespace {

constexpr double kPi = std::numbers::pi;

Angle lit(double v) {
    return Angle::literal(v);
}

Angle t(double scale = 1.0, double offset = 0.0) {
    return Angle::param("t", scale, offset);
}

std::vector<RewriteRule> make_rules() {
    std::vector<RewriteRule> rules;
    rules.push_back({"cnot",
                     2,
                     {Gate::cnot(0, 1)},
                     {Gate::ry(0, lit(kPi / 2)), Gate::xx(0, 1, lit(kPi / 2)), Gate::rx(0, lit(-kPi / 2)),
                      Gate::rx(1, lit(-kPi / 2)), Gate::ry(0, lit(-kPi / 2))}});
    rules.push_back({"cry",
                     2,
                     {Gate::cry(0, 1, t())},
                     {Gate::ry(1, t(0.5)), Gate::cnot(0, 1), Gate::ry(1, t(-0.5)), Gate::cnot(0, 1)}});
    rules.push_back({"h", 1, {Gate::h(0)}, {Gate::rz(0, lit(kPi)), Gate::ry(0, lit(kPi / 2))}});
    rules.push_back({"cnot-ry-cnot",
                     2,
                     {Gate::cnot(0, 1), Gate::ry(1, t()), Gate::cnot(0, 1)},
                     {Gate::rx(0, lit(-kPi / 2)), Gate::rz(0, lit(-kPi / 2)), Gate::rz(1, lit(-kPi / 2)),
                      Gate::xx(0, 1, t()), Gate::rz(0, lit(kPi / 2)), Gate::rx(0, lit(kPi / 2)),
                      Gate::rz(1, lit(kPi / 2))}});
    rules.push_back({"cnot-rz-cnot",
                     2,
                     {Gate::cnot(0, 1), Gate::rz(1, t()), Gate::cnot(0, 1)},
                     {Gate::ry(0, lit(kPi / 2)), Gate::ry(1, lit(kPi / 2)), Gate::xx(0, 1, t()),
                      Gate::ry(0, lit(-kPi / 2)), Gate::ry(1, lit(-kPi / 2))}});
    rules.push_back(
        {"cnot-rx-cnot", 2, {Gate::cnot(0, 1), Gate::rx(1, t()), Gate::cnot(0, 1)}, {Gate::rx(1, t())}});
    return rules;
}

/// Substitutes `value` for the rule symbol and maps rule qubits 0/1 to `q0`/`q1`.
std::vector<Gate> instantiate(const std::vector<Gate> &gates, Qubit q0, Qubit q1, const Angle &value) {
    std::vector<Gate> out;
    for (Gate g : gates) {
        for (std::size_t k = 0; k < g.arity(); ++k) {
            g.qubits[k] = g.qubits[k] == 0 ? q0 : q1;
        }
        if (gate_has_angle(g.kind) && !g.angle.is_literal()) {
            g.angle = value.scaled(g.angle.scale).shifted(g.angle.offset);
        }
        out.push_back(g);
    }
    return out;
}

void append_translation(std::vector<Gate> &out, const Gate &g) {
    switch (g.kind) {
        case GateKind::H: {
            auto r = instantiate(rewrite_rule("h").replacement, g.qubits[0], 0, {});
            out.insert(out.end(), r.begin(), r.end());
            return;
        }
        case GateKind::CNOT: {
            auto r = instantiate(rewrite_rule("cnot").replacement, g.qubits[0], g.qubits[1], {});
            out.insert(out.end(), r.begin(), r.end());
            return;
        }
        case GateKind::CRY: {
            for (const Gate &h : instantiate(rewrite_rule("cry").replacement, g.qubits[0], g.qubits[1], g.angle)) {
                append_translation(out, h);
            }
            return;
        }
        default:
            out.push_back(g);
    }
}

}  // namespace

const std::vector<RewriteRule> &rewrite_rules() {
    static const std::vector<RewriteRule> rules = make_rules();
    return rules;
}

const RewriteRule &rewrite_rule(const std::string &name) {
    for (const RewriteRule &r : rewrite_rules()) {
        if (r.name == name) {
            return r;
        }
    }
    throw ValidationError("no rewrite rule named '" + name + "'");
}

bool verify_rule(const RewriteRule &rule, std::mt19937_64 &rng, int samples, double tol) {
    std::uniform_real_distribution<double> u(-2 * kPi, 2 * kPi);
    for (int s = 0; s < samples; ++s) {
        ParamVector p{{"t", u(rng)}};
        Circuit lhs = lightcone::bind(Circuit(rule.n_qubits, rule.pattern), p, BindMode::IgnoreExtra);
        Circuit rhs = lightcone::bind(Circuit(rule.n_qubits, rule.replacement), p, BindMode::IgnoreExtra);
        if (!unitary_equiv(lhs, rhs, tol)) {
            return false;
        }
    }
    return true;
}

Circuit translate_gates(const Circuit &circuit) {
    std::vector<Gate> out;
    for (const Gate &g : circuit.gates()) {
        append_translation(out, g);
    }
    return Circuit(circuit.n_qubits(), std::move(out));
}

namespace {

/// Lowers CRY and H, leaving CNOT in place.
std::vector<Gate> expand_controlled(const Circuit &circuit) {
    std::vector<Gate> out;
    for (const Gate &g : circuit.gates()) {
        if (g.kind == GateKind::CRY) {
            auto r = instantiate(rewrite_rule("cry").replacement, g.qubits[0], g.qubits[1], g.angle);
            out.insert(out.end(), r.begin(), r.end());
        } else if (g.kind == GateKind::H) {
            append_translation(out, g);
        } else {
            out.push_back(g);
        }
    }
    return out;
}

/// If gates[open] starts a CNOT(c,t) rotations(t) CNOT(c,t) block, returns the block positions and summed angle.
std::optional<std::pair<std::vector<std::size_t>, Angle>> find_block(const std::vector<Gate> &gates,
                                                                     std::size_t open) {
    const Gate &first = gates[open];
    if (first.kind != GateKind::CNOT) {
        return std::nullopt;
    }
    const Qubit c = first.qubits[0];
    const Qubit tq = first.qubits[1];
    std::vector<std::size_t> members{open};
    std::optional<GateKind> axis;
    Angle total = lit(0.0);
    for (std::size_t k = open + 1; k < gates.size(); ++k) {
        const Gate &g = gates[k];
        if (!g.acts_on(c) && !g.acts_on(tq)) {
            continue;
        }
        if (g.kind == GateKind::CNOT && g.qubits[0] == c && g.qubits[1] == tq) {
            if (!axis) {
                return std::nullopt;
            }
            members.push_back(k);
            return std::make_pair(members, total);
        }
        if (g.arity() == 1 && g.qubits[0] == tq && is_rotation(g.kind) && (!axis || *axis == g.kind)) {
            auto s = add_angles(total, g.angle);
            if (!s) {
                return std::nullopt;
            }
            total = *s;
            axis = g.kind;
            members.push_back(k);
            continue;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Circuit to_native(const Circuit &circuit) {
    std::vector<Gate> gates = expand_controlled(circuit);
    std::vector<bool> consumed(gates.size(), false);
    std::vector<Gate> out;
    for (std::size_t k = 0; k < gates.size(); ++k) {
        if (consumed[k]) {
            continue;
        }
        if (auto block = find_block(gates, k)) {
            const auto &[members, total] = *block;
            const Gate &rot = gates[members[1]];
            std::string rule = rot.kind == GateKind::RX   ? "cnot-rx-cnot"
                               : rot.kind == GateKind::RY ? "cnot-ry-cnot"
                                                          : "cnot-rz-cnot";
            for (std::size_t m : members) {
                consumed[m] = true;
            }
            auto r = instantiate(rewrite_rule(rule).replacement, gates[k].qubits[0], gates[k].qubits[1], total);
            out.insert(out.end(), r.begin(), r.end());
            continue;
        }
        append_translation(out, gates[k]);
    }
    return Circuit(circuit.n_qubits(), std::move(out));
}

namespace {

PauliString generator(const Gate &g) {
    switch (g.kind) {
        case GateKind::RX:
            return PauliString::single(g.qubits[0], Pauli::X);
        case GateKind::RY:
            return PauliString::single(g.qubits[0], Pauli::Y);
        case GateKind::RZ:
            return PauliString::single(g.qubits[0], Pauli::Z);
        case GateKind::XX:
            return PauliString::from_letters({{g.qubits[0], Pauli::X}, {g.qubits[1], Pauli::X}});
        default:
            return {};
    }
}

bool is_native_rotation(const Gate &g) {
    return is_rotation(g.kind) || g.kind == GateKind::XX;
}

bool shares_qubit(const Gate &a, const Gate &b) {
    for (Qubit q : a.targets()) {
        if (b.acts_on(q)) {
            return true;
        }
    }
    return false;
}

bool is_trivial(const Angle &a) {
    return a.is_literal() && std::abs(std::remainder(a.value(), 2 * kPi)) < 1e-12;
}

Angle wrap(const Angle &a) {
    if (!a.is_literal()) {
        return a;
    }
    double v = std::remainder(a.value(), 2 * kPi);
    if (v <= -kPi + 1e-15) {
        v += 2 * kPi;
    }
    return lit(v);
}

/// One sweep; returns true if anything changed.
bool peephole_pass(std::vector<std::optional<Gate>> &gates) {
    bool changed = false;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!gates[i]) {
            continue;
        }
        Gate &g = *gates[i];
        if (!is_native_rotation(g)) {
            continue;
        }
        Angle w = wrap(g.angle);
        if (!(w == g.angle)) {
            g.angle = w;
            changed = true;
        }
        if (is_trivial(g.angle)) {
            gates[i].reset();
            changed = true;
            continue;
        }
        const PauliString gen = generator(g);
        for (std::size_t j = i + 1; j < gates.size(); ++j) {
            if (!gates[j] || !shares_qubit(g, *gates[j])) {
                continue;
            }
            Gate &h = *gates[j];
            if (!is_native_rotation(h)) {
                break;
            }
            PauliString hgen = generator(h);
            if (hgen == gen) {
                auto sum = add_angles(g.angle, h.angle);
                if (sum) {
                    h.angle = wrap(*sum);
                    gates[i].reset();
                    changed = true;
                }
                break;
            }
            if (!hgen.commutes_with(gen)) {
                break;
            }
        }
    }
    return changed;
}

}  // namespace

Circuit peephole_optimize(const Circuit &circuit, const PeepholeOptions &options) {
    std::vector<std::optional<Gate>> gates(circuit.gates().begin(), circuit.gates().end());
    while (peephole_pass(gates)) {
    }
    if (options.absorb_final_rz) {
        std::vector<bool> closed(circuit.n_qubits(), false);
        for (std::size_t i = gates.size(); i-- > 0;) {
            if (!gates[i]) {
                continue;
            }
            const Gate &g = *gates[i];
            if (g.kind == GateKind::RZ && !closed[g.qubits[0]]) {
                gates[i].reset();
                continue;
            }
            for (Qubit q : g.targets()) {
                closed[q] = true;
            }
        }
    }
    std::vector<Gate> out;
    for (auto &g : gates) {
        if (g) {
            out.push_back(*g);
        }
    }
    return Circuit(circuit.n_qubits(), std::move(out));
}

Circuit compile_native(const Circuit &circuit, int opt_level) {
    if (opt_level == 0) {
        return translate_gates(circuit);
    }
    if (opt_level == 1) {
        return peephole_optimize(to_native(circuit));
    }
    throw ValidationError("optimization level must be 0 or 1");
}

GateCounts count_gates(const Circuit &circuit) {
    GateCounts c;
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::XX:
                ++c.xx;
                break;
            case GateKind::RX:
                ++c.rx;
                break;
            case GateKind::RY:
                ++c.ry;
                break;
            case GateKind::RZ:
                ++c.rz;
                break;
            default:
                ++c.other;
        }
        ++c.total;
    }
    return c;
}

Eigen::MatrixXcd circuit_unitary(const Circuit &circuit) {
    const std::size_t n = circuit.n_qubits();
    if (n > kMaxUnitaryQubits) {
        throw GuardError("dense unitary limited to " + std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector s(n);
        s.amplitudes()[0] = 0.0;
        s.amplitudes()[col] = 1.0;
        s.apply(circuit);
        for (std::size_t row = 0; row < dim; ++row) {
            u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s.amplitudes()[row];
        }
    }
    return u;
}

bool unitary_equiv(const Circuit &a, const Circuit &b, double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        throw ValidationError("unitary comparison needs equal qubit counts");
    }
    Eigen::MatrixXcd ua = circuit_unitary(a);
    Eigen::MatrixXcd ub = circuit_unitary(b);
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    ub.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(ua(r, c)) < 1e-12) {
        return false;
    }
    std::complex<double> phase = ua(r, c) / ub(r, c);
    phase /= std::abs(phase);
    return (ua - phase * ub).norm() <= tol;
}

}  // namespace lightcone
