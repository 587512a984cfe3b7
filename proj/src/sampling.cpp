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

#include "lightcone/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lightcone/error.hpp"
#include "lightcone/simulator.hpp"

namespace lightcone {

ConfusionMatrix ConfusionMatrix::symmetric(double flip) {
    ConfusionMatrix c;
    c.m = {{{1.0 - flip, flip}, {flip, 1.0 - flip}}};
    c.validate();
    return c;
}

void ConfusionMatrix::validate() const {
    for (const auto &row : m) {
        for (double v : row) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ValidationError("confusion matrix entries must lie in [0, 1]");
            }
        }
        if (std::abs(row[0] + row[1] - 1.0) > 1e-9) {
            throw ValidationError("confusion matrix rows must sum to 1");
        }
    }
}

double flip_from_joint_fidelity(double joint_fidelity, std::size_t n_qubits) {
    if (!(joint_fidelity > 0.0 && joint_fidelity <= 1.0) || n_qubits == 0) {
        throw ValidationError("joint readout fidelity must lie in (0, 1] over at least one qubit");
    }
    return 1.0 - std::pow(joint_fidelity, 1.0 / static_cast<double>(n_qubits));
}

NoiseModel NoiseModel::noiseless() {
    return NoiseModel{};
}

NoiseModel NoiseModel::standard(std::size_t n_qubits, double joint_fidelity) {
    NoiseModel nm;
    nm.p1 = 0.005;
    nm.p2 = 0.015;
    ConfusionMatrix c = ConfusionMatrix::symmetric(flip_from_joint_fidelity(joint_fidelity, n_qubits));
    for (std::size_t q = 0; q < n_qubits; ++q) {
        nm.readout[static_cast<Qubit>(q)] = c;
    }
    return nm;
}

bool NoiseModel::has_readout_noise() const {
    return std::any_of(readout.begin(), readout.end(),
                       [](const auto &e) { return e.second.m[0][1] > 0.0 || e.second.m[1][0] > 0.0; });
}

double NoiseModel::gate_error_probability(const Gate &g) const {
    if (g.kind == GateKind::RZ) {
        return p_rz;
    }
    return g.arity() == 2 ? p2 : p1;
}

void NoiseModel::validate() const {
    for (double p : {p1, p2, p_rz}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("depolarizing probabilities must lie in [0, 1]");
        }
    }
    for (const auto &[q, c] : readout) {
        c.validate();
    }
}

std::pair<double, double> wilson_interval(double successes, double trials, double z) {
    if (trials <= 0.0) {
        return {0.0, 1.0};
    }
    double p = successes / trials;
    double z2 = z * z;
    double denom = 1.0 + z2 / trials;
    double centre = (p + z2 / (2.0 * trials)) / denom;
    double half = z * std::sqrt(std::max(0.0, p * (1.0 - p) / trials + z2 / (4.0 * trials * trials))) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::vector<double> correct_readout(const std::vector<double> &probabilities,
                                    const std::vector<ConfusionMatrix> &matrices) {
    if (probabilities.size() != (std::size_t{1} << matrices.size())) {
        throw ValidationError("distribution size does not match the number of confusion matrices");
    }
    std::vector<double> v = probabilities;
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const auto &m = matrices[k].m;
        matrices[k].validate();
        double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (std::abs(det) < 1e-12) {
            throw ValidationError("confusion matrix for bit " + std::to_string(k) + " is singular");
        }
        // measured = M^T prepared, so prepared = (M^T)^{-1} measured.
        const double inv[2][2] = {{m[1][1] / det, -m[1][0] / det}, {-m[0][1] / det, m[0][0] / det}};
        const std::size_t bit = std::size_t{1} << k;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i & bit) {
                continue;
            }
            double a = v[i];
            double b = v[i | bit];
            v[i] = inv[0][0] * a + inv[0][1] * b;
            v[i | bit] = inv[1][0] * a + inv[1][1] * b;
        }
    }
    double total = 0.0;
    for (double &x : v) {
        x = std::max(0.0, x);
        total += x;
    }
    if (total <= 0.0) {
        throw ValidationError("corrected distribution has no positive mass");
    }
    for (double &x : v) {
        x /= total;
    }
    return v;
}

namespace {

PauliString random_error(std::size_t arity, const Gate &g, Rng &rng) {
    std::uniform_int_distribution<int> pick(1, arity == 2 ? 15 : 3);
    int code = pick(rng);
    PauliString e;
    for (std::size_t k = 0; k < arity; ++k) {
        int letter = (code >> (2 * k)) & 3;
        PauliString one = PauliString::single(g.qubits[k], static_cast<Pauli>(letter));
        e.x |= one.x;
        e.z |= one.z;
    }
    return e;
}

std::uint64_t draw(const std::vector<double> &cumulative, Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, cumulative.back());
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u(rng));
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                                               static_cast<std::ptrdiff_t>(cumulative.size()) - 1));
}

std::vector<double> cumulate(const std::vector<double> &p) {
    std::vector<double> c(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        c[i] = acc;
    }
    return c;
}

}  // namespace

std::vector<MeasurementRecord> sample_setting(const Circuit &circuit, const std::vector<PauliTerm> &terms,
                                              const SampleOptions &options, Rng &rng) {
    if (options.shots == 0) {
        throw ValidationError("shot count must be positive");
    }
    if (terms.empty()) {
        throw ValidationError("measurement setting needs at least one term");
    }
    options.noise.validate();
    PauliString setting;
    for (const PauliTerm &t : terms) {
        if (!setting.qubitwise_compatible(t.string)) {
            throw ValidationError("terms in one setting must be qubit-wise compatible");
        }
        if (t.string.support_mask() >> circuit.n_qubits()) {
            throw ValidationError("term " + to_string(t.string) + " outside circuit qubits");
        }
        setting.x |= t.string.x;
        setting.z |= t.string.z;
    }
    std::vector<Gate> basis = basis_change(setting);
    std::vector<Gate> gates = circuit.gates();
    gates.insert(gates.end(), basis.begin(), basis.end());
    const Circuit measured(circuit.n_qubits(), gates);

    const std::vector<double> ideal = cumulate(simulate(measured).probabilities());
    std::vector<double> p_err(gates.size());
    for (std::size_t k = 0; k < gates.size(); ++k) {
        p_err[k] = options.noise.gate_error_probability(gates[k]);
    }
    const bool gate_noise = options.noise.has_gate_noise();
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    std::map<std::uint64_t, std::uint64_t> counts;
    std::vector<std::pair<std::size_t, PauliString>> errors;
    for (std::uint64_t s = 0; s < options.shots; ++s) {
        errors.clear();
        if (gate_noise) {
            for (std::size_t k = 0; k < gates.size(); ++k) {
                if (p_err[k] > 0.0 && u01(rng) < p_err[k]) {
                    errors.emplace_back(k, random_error(gates[k].arity(), gates[k], rng));
                }
            }
        }
        std::uint64_t outcome;
        if (errors.empty()) {
            outcome = draw(ideal, rng);
        } else {
            StateVector psi(circuit.n_qubits());
            std::size_t next = 0;
            for (std::size_t k = 0; k < gates.size(); ++k) {
                psi.apply(gates[k]);
                while (next < errors.size() && errors[next].first == k) {
                    psi.apply_pauli(errors[next].second);
                    ++next;
                }
            }
            outcome = draw(cumulate(psi.probabilities()), rng);
        }
        for (const auto &[q, c] : options.noise.readout) {
            if (q >= circuit.n_qubits()) {
                continue;
            }
            int bit = (outcome >> q) & 1;
            if (u01(rng) < c.m[bit][1 - bit]) {
                outcome ^= std::uint64_t{1} << q;
            }
        }
        ++counts[outcome];
    }

    std::vector<MeasurementRecord> out;
    const double shots = static_cast<double>(options.shots);
    for (const PauliTerm &t : terms) {
        MeasurementRecord rec;
        rec.term = t;
        rec.basis_gates = basis;
        rec.shots = options.shots;
        rec.counts = counts;
        const std::uint64_t mask = t.string.support_mask();
        double est = 0.0;
        if (options.correct_readout && t.string.weight() > 0) {
            std::vector<Qubit> support = t.support();
            std::vector<double> marginal(std::size_t{1} << support.size(), 0.0);
            for (const auto &[b, n] : counts) {
                std::size_t idx = 0;
                for (std::size_t k = 0; k < support.size(); ++k) {
                    idx |= ((b >> support[k]) & 1) << k;
                }
                marginal[idx] += static_cast<double>(n) / shots;
            }
            std::vector<ConfusionMatrix> mats;
            for (Qubit q : support) {
                auto it = options.noise.readout.find(q);
                mats.push_back(it == options.noise.readout.end() ? ConfusionMatrix{} : it->second);
            }
            std::vector<double> fixed = correct_readout(marginal, mats);
            for (std::size_t i = 0; i < fixed.size(); ++i) {
                est += (std::popcount(i) & 1) ? -fixed[i] : fixed[i];
            }
            rec.readout_corrected = true;
        } else {
            for (const auto &[b, n] : counts) {
                est += (std::popcount(b & mask) & 1) ? -static_cast<double>(n) : static_cast<double>(n);
            }
            est /= shots;
        }
        rec.estimate = std::clamp(est, -1.0, 1.0);
        rec.std_error = std::sqrt(std::max(0.0, 1.0 - rec.estimate * rec.estimate) / shots);
        auto [lo, hi] = wilson_interval((1.0 + rec.estimate) / 2.0 * shots, shots);
        rec.ci_low = 2.0 * lo - 1.0;
        rec.ci_high = 2.0 * hi - 1.0;
        out.push_back(std::move(rec));
    }
    return out;
}

MeasurementRecord sample(const Circuit &circuit, const PauliTerm &term, const SampleOptions &options, Rng &rng) {
    return sample_setting(circuit, {term}, options, rng).front();
}

}  // namespace lightcone
