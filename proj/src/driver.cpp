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

#include "lightcone/driver.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "lightcone/causal_cone.hpp"
#include "lightcone/error.hpp"
#include "lightcone/native.hpp"
#include "lightcone/simulator.hpp"

namespace lightcone {

using nlohmann::json;

std::string evaluation_mode_name(EvaluationMode mode) {
    return mode == EvaluationMode::Exact ? "exact" : "sampled";
}

namespace {

Circuit prepare(const Circuit &c, const ExperimentConfig &cfg) {
    return cfg.native ? compile_native(c, cfg.opt_level) : c;
}

std::optional<NoiseModel> relabel_noise(const std::optional<NoiseModel> &noise, const QubitMap &relabel) {
    if (!noise) {
        return std::nullopt;
    }
    NoiseModel local = *noise;
    local.readout.clear();
    for (const auto &[q, m] : noise->readout) {
        auto it = relabel.find(q);
        if (it != relabel.end()) {
            local.readout[it->second] = m;
        }
    }
    return local;
}

void check_params(const Circuit &ansatz, const ParamVector &params) {
    for (const std::string &p : ansatz.parameters()) {
        if (!params.contains(p)) {
            throw ValidationError("missing value for parameter '" + p + "'");
        }
    }
}

}  // namespace

Evaluator::Evaluator(ExperimentConfig config) : config_(std::move(config)) {
    config_.validate();
    const std::vector<PauliTerm> measured = config_.hamiltonian.measured_terms();
    if (measured.empty()) {
        return;
    }
    if (config_.strategy == Strategy::Full) {
        PlannedCircuit pc;
        pc.id = "full";
        pc.circuit = prepare(config_.ansatz, config_);
        for (std::size_t q = 0; q < config_.ansatz.n_qubits(); ++q) {
            pc.relabel[static_cast<Qubit>(q)] = static_cast<Qubit>(q);
        }
        pc.owned = measured;
        pc.local = measured;
        pc.shots = config_.shots;
        pc.noise = config_.noise;
        circuits_.push_back(std::move(pc));
        return;
    }
    const ReducedSet rs = reduced_set(config_.ansatz, config_.hamiltonian);
    std::vector<SubHamiltonian> groups;
    std::vector<std::uint64_t> shots;
    if (config_.budget) {
        plan_ = plan_shots(rs, config_.strategy, config_.budget->epsilon, config_.budget->mode, config_.shots,
                           config_.budget->rounding);
        groups = plan_->groups;
        for (const ShotEstimate &b : plan_->budgets) {
            shots.push_back(config_.budget->use_prescribed ? b.prescribed : b.estimated);
        }
    } else {
        for (SubHamiltonian &g : config_.strategy == Strategy::ReducedAccuracy ? group_all(rs) : minimal_cover(rs)) {
            if (!g.owned.empty()) {
                groups.push_back(std::move(g));
                shots.push_back(config_.shots);
            }
        }
    }
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const ReducedCircuit &rc = rs.circuits[groups[k].circuit];
        PlannedCircuit pc;
        pc.id = "c" + std::to_string(groups[k].circuit);
        pc.circuit = prepare(rc.circuit, config_);
        pc.relabel = rc.relabel;
        pc.owned = groups[k].owned;
        for (const PauliTerm &t : pc.owned) {
            pc.local.push_back(relabel_term(t, rc.relabel));
        }
        pc.shots = shots[k];
        pc.noise = relabel_noise(config_.noise, rc.relabel);
        circuits_.push_back(std::move(pc));
    }
}

EnergyReport Evaluator::evaluate(const ParamVector &params, Rng &rng) const {
    check_params(config_.ansatz, params);
    EnergyReport report;
    report.strategy = config_.strategy;
    report.mode = config_.mode;
    report.params = params;
    report.circuit_count = circuits_.size();
    report.energy = config_.hamiltonian.identity_coefficient();
    report.baseline_shots = config_.hamiltonian.measured_terms().size() * config_.shots;
    double variance = 0.0;
    for (const PlannedCircuit &pc : circuits_) {
        const Circuit bound = lightcone::bind(pc.circuit, params, BindMode::IgnoreExtra);
        std::optional<StateVector> state;
        if (config_.mode == EvaluationMode::Exact) {
            state = simulate(bound);
        }
        for (std::size_t k = 0; k < pc.owned.size(); ++k) {
            MeasurementRecord rec;
            if (state) {
                rec.estimate = expectation(*state, pc.local[k].string);
                rec.ci_low = rec.estimate;
                rec.ci_high = rec.estimate;
            } else {
                SampleOptions opts{pc.shots, pc.noise.value_or(NoiseModel::noiseless()), config_.readout_correct};
                rec = sample(bound, PauliTerm{1.0, pc.local[k].string}, opts, rng);
                report.total_shots += pc.shots;
            }
            rec.circuit_id = pc.id;
            rec.term = pc.owned[k];
            report.energy += rec.term.coefficient * rec.estimate;
            variance += rec.term.coefficient * rec.term.coefficient * rec.std_error * rec.std_error;
            report.records.push_back(std::move(rec));
        }
    }
    report.std_error = std::sqrt(variance);
    report.exact_energy =
        energy(simulate(lightcone::bind(config_.ansatz, params, BindMode::IgnoreExtra)), config_.hamiltonian);
    report.delta = report.energy - report.exact_energy;
    return report;
}

EnergyReport evaluate(const ExperimentConfig &config, const ParamVector &params) {
    Rng rng(config.seed);
    return Evaluator(config).evaluate(params, rng);
}

OptimizeResult optimize(const ExperimentConfig &config) {
    const Evaluator ev(config);
    const OptimizerSettings settings = config.optimizer.value_or(OptimizerSettings{});
    const std::vector<std::string> &names = config.ansatz.parameters();
    const double sign = config.objective == Objective::Maximize ? -1.0 : 1.0;
    Rng rng(config.seed);
    auto objective = [&](const std::vector<double> &x) {
        return sign * ev.evaluate(make_params(config.ansatz, x), rng).energy;
    };
    std::uniform_real_distribution<double> start(-std::numbers::pi, std::numbers::pi);

    OptimizeResult out;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < std::max<std::size_t>(1, settings.restarts); ++r) {
        std::vector<double> x0(names.size());
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (r == 0 && settings.initial) {
                auto it = settings.initial->find(names[k]);
                if (it == settings.initial->end()) {
                    throw ConfigError("optimizer.initial: missing value for '" + names[k] + "'");
                }
                x0[k] = it->second;
            } else {
                x0[k] = start(rng);
            }
        }
        NelderMeadResult res = nelder_mead(objective, x0, settings.simplex);
        out.evaluations += res.evaluations;
        out.converged = out.converged && res.converged;
        for (std::size_t it = 0; it < res.trace.size(); ++it) {
            out.trace.push_back({r, it, sign * res.trace[it]});
        }
        if (res.value < best) {
            best = res.value;
            out.best = make_params(config.ansatz, res.x);
        }
    }
    out.energy = sign * best;
    return out;
}

double calibrate_epsilon(const ExperimentConfig &config, const ParamVector &params, std::size_t repetitions) {
    if (repetitions < 2) {
        throw ValidationError("calibration needs at least two repetitions");
    }
    if (config.mode == EvaluationMode::Exact) {
        return 0.0;
    }
    ExperimentConfig full = config;
    full.strategy = Strategy::Full;
    full.budget.reset();
    const Evaluator ev(full);
    Rng rng(config.seed);
    std::vector<double> energies;
    double mean = 0.0;
    for (std::size_t r = 0; r < repetitions; ++r) {
        energies.push_back(ev.evaluate(params, rng).energy);
        mean += energies.back();
    }
    mean /= static_cast<double>(repetitions);
    double ss = 0.0;
    for (double e : energies) {
        ss += (e - mean) * (e - mean);
    }
    return std::sqrt(ss / static_cast<double>(repetitions - 1));
}

json params_to_json(const ParamVector &params) {
    json out = json::object();
    for (const auto &[k, v] : params) {
        out[k] = v;
    }
    return out;
}

json to_json(const MeasurementRecord &record) {
    json basis = json::array();
    for (const Gate &g : record.basis_gates) {
        basis.push_back(to_string(g));
    }
    json counts = json::object();
    for (const auto &[bits, n] : record.counts) {
        counts[std::to_string(bits)] = n;
    }
    return json{{"circuit", record.circuit_id},
                {"term", to_string(record.term.string)},
                {"coefficient", record.term.coefficient},
                {"basis", basis},
                {"shots", record.shots},
                {"counts", counts},
                {"estimate", record.estimate},
                {"std_error", record.std_error},
                {"ci", {record.ci_low, record.ci_high}},
                {"readout_corrected", record.readout_corrected}};
}

json to_json(const EnergyReport &report) {
    json records = json::array();
    for (const MeasurementRecord &r : report.records) {
        records.push_back(to_json(r));
    }
    return json{{"strategy", strategy_name(report.strategy)},
                {"mode", evaluation_mode_name(report.mode)},
                {"params", params_to_json(report.params)},
                {"energy", report.energy},
                {"std_error", report.std_error},
                {"exact_energy", report.exact_energy},
                {"delta", report.delta},
                {"total_shots", report.total_shots},
                {"baseline_shots", report.baseline_shots},
                {"circuits", report.circuit_count},
                {"records", records}};
}

namespace {

json circuits_json(const Evaluator &ev) {
    json out = json::array();
    for (const PlannedCircuit &pc : ev.circuits()) {
        json terms = json::array();
        for (const PauliTerm &t : pc.owned) {
            terms.push_back(to_string(t.string));
        }
        json qubits = json::array();
        for (const auto &[orig, local] : pc.relabel) {
            qubits.push_back(orig);
        }
        GateCounts gc = count_gates(pc.circuit);
        out.push_back({{"id", pc.id},
                       {"qubits", qubits},
                       {"gates", pc.circuit.size()},
                       {"two_qubit_gates", pc.circuit.two_qubit_count()},
                       {"xx", gc.xx},
                       {"depth", pc.circuit.depth()},
                       {"shots", pc.shots},
                       {"terms", terms}});
    }
    return out;
}

json plan_json(const ShotPlan &plan) {
    json rows = json::array();
    for (std::size_t k = 0; k < plan.groups.size(); ++k) {
        const ShotEstimate &b = plan.budgets[k];
        rows.push_back({{"circuit", "c" + std::to_string(plan.groups[k].circuit)},
                        {"term_count", b.term_count},
                        {"h_max", b.h_max},
                        {"epsilon", b.epsilon},
                        {"raw", b.raw},
                        {"estimated", b.estimated},
                        {"prescribed", b.prescribed},
                        {"measured_terms", b.measured_terms}});
    }
    return json{{"rows", rows},
                {"total_estimated", plan.total_estimated},
                {"total_prescribed", plan.total_prescribed},
                {"baseline", plan.baseline}};
}

void write_convergence(const ExperimentConfig &cfg, const ParamVector &params, const std::filesystem::path &file) {
    std::ofstream out(file);
    if (!out) {
        throw Error("cannot write " + file.string());
    }
    out.precision(12);
    out << "shots,kind,term,estimate,std_error,exact,abs_delta\n";
    const StateVector psi = simulate(lightcone::bind(cfg.ansatz, params, BindMode::IgnoreExtra));
    for (std::uint64_t s : cfg.convergence_shots) {
        ExperimentConfig run = cfg;
        run.mode = EvaluationMode::Sampled;
        run.shots = s;
        run.budget.reset();
        Rng rng(cfg.seed);
        EnergyReport rep = Evaluator(run).evaluate(params, rng);
        out << s << ",energy,," << rep.energy << ',' << rep.std_error << ',' << rep.exact_energy << ','
            << std::abs(rep.delta) << '\n';
        for (const MeasurementRecord &r : rep.records) {
            double exact = expectation(psi, r.term.string);
            out << s << ",term," << to_string(r.term.string) << ',' << r.estimate << ',' << r.std_error << ','
                << exact << ',' << std::abs(r.estimate - exact) << '\n';
        }
    }
}

}  // namespace

std::vector<std::filesystem::path> run_experiment(const ExperimentConfig &config,
                                                  const std::filesystem::path &out_dir) {
    config.validate();
    std::filesystem::create_directories(out_dir);
    std::vector<Strategy> strategies = config.sweep.empty() ? std::vector<Strategy>{config.strategy} : config.sweep;
    std::vector<std::filesystem::path> written;
    for (Strategy s : strategies) {
        ExperimentConfig cfg = config;
        cfg.strategy = s;
        const Evaluator ev(cfg);
        ParamVector params = cfg.params;
        json doc;
        if (cfg.optimizer) {
            OptimizeResult opt = optimize(cfg);
            params = opt.best;
            json trace = json::array();
            for (const TracePoint &t : opt.trace) {
                trace.push_back({t.restart, t.iteration, t.energy});
            }
            doc["optimizer"] = {{"energy", opt.energy},
                                {"evaluations", opt.evaluations},
                                {"converged", opt.converged},
                                {"trace", trace}};
        }
        Rng rng(cfg.seed);
        EnergyReport report = ev.evaluate(params, rng);
        doc["problem"] = cfg.name;
        doc["seed"] = cfg.seed;
        doc["native"] = cfg.native;
        doc["noise"] = cfg.noise.has_value();
        doc["readout_correct"] = cfg.readout_correct;
        doc["report"] = to_json(report);
        doc["plan_circuits"] = circuits_json(ev);
        if (ev.plan()) {
            doc["budget"] = plan_json(*ev.plan());
        }
        const std::string stem = strategy_name(s);
        std::filesystem::path report_file = out_dir / ("report_" + stem + ".json");
        std::ofstream(report_file) << doc.dump(2) << '\n';
        written.push_back(report_file);
        std::filesystem::path csv = out_dir / ("convergence_" + stem + ".csv");
        write_convergence(cfg, params, csv);
        written.push_back(csv);
    }
    return written;
}

}  // namespace lightcone
