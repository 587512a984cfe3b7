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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lightcone/benchmarks.hpp"
#include "lightcone/causal_cone.hpp"
#include "lightcone/driver.hpp"
#include "lightcone/error.hpp"
#include "lightcone/native.hpp"

using namespace lightcone;
using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;

struct Options {
    std::string config;
    std::string problem;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::optional<std::string> strategy;

    std::optional<double> epsilon;
    std::string epsilon_mode;
    bool prescribed = false;

    bool native = false;
    int opt_level = 1;
    bool report = false;

    std::optional<std::uint64_t> shots;
    std::string noise;
    std::string noise_file;
    bool readout_correct = false;

    std::size_t repetitions = 100;
};

ExperimentConfig load(const Options &o) {
    if (o.config.empty() == o.problem.empty()) {
        throw ConfigError("give exactly one of --config or --problem");
    }
    ExperimentConfig cfg = o.config.empty() ? builtin_config(o.problem) : load_config(o.config);
    if (o.seed) {
        cfg.seed = *o.seed;
    }
    if (o.strategy) {
        cfg.strategy = strategy_from_name(*o.strategy);
        cfg.sweep.clear();
    }
    if (o.shots) {
        cfg.shots = *o.shots;
    }
    if (o.noise == "off") {
        cfg.noise.reset();
    } else if (o.noise == "default") {
        cfg.noise = NoiseModel::standard(cfg.ansatz.n_qubits(), cfg.readout_fidelity);
        cfg.native = true;
    } else if (o.noise == "file") {
        if (o.noise_file.empty()) {
            throw ConfigError("--noise file needs --noise-file");
        }
        std::ifstream in(o.noise_file);
        if (!in) {
            throw ConfigError("cannot read " + o.noise_file);
        }
        try {
            cfg.noise = noise_from_json(json::parse(in), cfg.ansatz.n_qubits());
        } catch (const json::parse_error &e) {
            throw ConfigError(o.noise_file + ": " + e.what());
        }
        cfg.native = true;
    }
    if (o.readout_correct) {
        cfg.readout_correct = true;
    }
    if (o.epsilon) {
        cfg.budget = BudgetSettings{.epsilon = *o.epsilon};
    }
    if (cfg.budget && !o.epsilon_mode.empty()) {
        cfg.budget->mode = o.epsilon_mode == "per-circuit" ? EpsilonMode::PerCircuit : EpsilonMode::TotalSplit;
    }
    if (cfg.budget && o.prescribed) {
        cfg.budget->use_prescribed = true;
    }
    cfg.validate();
    return cfg;
}

/// Writes to `<out>/<name>` when --out is given, stdout otherwise.
class Sink {
   public:
    Sink(const Options &o, const std::string &name) {
        if (!o.out.empty()) {
            std::filesystem::create_directories(o.out);
            path_ = std::filesystem::path(o.out) / name;
            file_.open(path_);
            if (!file_) {
                throw Error("cannot write " + path_.string());
            }
        }
    }
    std::ostream &stream() {
        return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout;
    }

   private:
    std::filesystem::path path_;
    std::ofstream file_;
};

std::string join_terms(const std::vector<PauliTerm> &terms) {
    std::string out;
    for (const PauliTerm &t : terms) {
        out += (out.empty() ? "" : ";") + to_string(t.string);
    }
    return out;
}

json qubit_map(const QubitMap &m) {
    json out = json::object();
    for (const auto &[orig, local] : m) {
        out[std::to_string(orig)] = local;
    }
    return out;
}

void cmd_reduce(const Options &o) {
    ExperimentConfig cfg = load(o);
    ReducedSet rs = reduced_set(cfg.ansatz, cfg.hamiltonian);
    Sink sink(o, o.format == "csv" ? "reduce.csv" : "reduce.jsonl");
    std::ostream &out = sink.stream();
    if (o.format == "csv") {
        out << "term,circuit,qubits,gates,depth,qubit_delta,gate_delta,term_gates\n";
    }
    for (std::size_t k = 0; k < rs.entries.size(); ++k) {
        const ReducedAnsatz &e = rs.entries[k];
        const ReducedCircuit &rc = rs.circuits[rs.term_circuit[k]];
        const long qubit_delta = static_cast<long>(rc.circuit.n_qubits()) - static_cast<long>(cfg.ansatz.n_qubits());
        const long gate_delta = static_cast<long>(rc.circuit.size()) - static_cast<long>(cfg.ansatz.size());
        if (o.format == "csv") {
            out << to_string(e.term.string) << ",c" << rs.term_circuit[k] << ',' << rc.circuit.n_qubits() << ','
                << rc.circuit.size() << ',' << rc.circuit.depth() << ',' << qubit_delta << ',' << gate_delta << ','
                << e.term_cone.size() << '\n';
            continue;
        }
        json gates = json::array();
        for (std::size_t g : rc.cone_gates) {
            gates.push_back(g);
        }
        out << json{{"term", to_string(e.term.string)},
                    {"coefficient", e.term.coefficient},
                    {"circuit", "c" + std::to_string(rs.term_circuit[k])},
                    {"reduced_term", to_string(relabel_term(e.term, rc.relabel).string)},
                    {"qubit_map", qubit_map(rc.relabel)},
                    {"original_gates", gates},
                    {"qubits", rc.circuit.n_qubits()},
                    {"gates", rc.circuit.size()},
                    {"depth", rc.circuit.depth()},
                    {"qubit_delta", qubit_delta},
                    {"gate_delta", gate_delta},
                    {"depth_delta", static_cast<long>(rc.circuit.depth()) - static_cast<long>(cfg.ansatz.depth())},
                    {"text", serialize(rc.circuit)}}
                   .dump()
            << '\n';
    }
}

void cmd_plan(const Options &o) {
    ExperimentConfig cfg = load(o);
    if (!cfg.budget) {
        throw ConfigError("plan needs --epsilon or a budget section");
    }
    if (cfg.strategy == Strategy::Full) {
        throw ConfigError("plan needs a reduced strategy");
    }
    ReducedSet rs = reduced_set(cfg.ansatz, cfg.hamiltonian);
    ShotPlan plan =
        plan_shots(rs, cfg.strategy, cfg.budget->epsilon, cfg.budget->mode, cfg.shots, cfg.budget->rounding);
    Sink sink(o, o.format == "csv" ? "plan.csv" : "plan.json");
    std::ostream &out = sink.stream();
    if (o.format == "csv") {
        out.precision(10);
        out << "group,terms,abs_coefficients,h_max,term_count,raw,estimated,prescribed,owned\n";
        for (std::size_t k = 0; k < plan.groups.size(); ++k) {
            const SubHamiltonian &g = plan.groups[k];
            const ShotEstimate &b = plan.budgets[k];
            std::string coefs;
            for (const PauliTerm &t : g.terms) {
                std::ostringstream s;
                s << std::abs(t.coefficient);
                coefs += (coefs.empty() ? "" : ";") + s.str();
            }
            out << 'c' << g.circuit << ',' << join_terms(g.terms) << ',' << coefs << ',' << b.h_max << ','
                << b.term_count << ',' << b.raw << ',' << b.estimated << ',' << b.prescribed << ','
                << join_terms(g.owned) << '\n';
        }
        out << "total,,,,,," << plan.total_estimated << ',' << plan.total_prescribed << '\n';
        out << "baseline,,,,,," << plan.baseline << ',' << plan.baseline << '\n';
        return;
    }
    json rows = json::array();
    for (std::size_t k = 0; k < plan.groups.size(); ++k) {
        const ShotEstimate &b = plan.budgets[k];
        json terms = json::array();
        for (const PauliTerm &t : plan.groups[k].terms) {
            terms.push_back({{"term", to_string(t.string)}, {"coefficient", t.coefficient}});
        }
        rows.push_back({{"group", "c" + std::to_string(plan.groups[k].circuit)},
                        {"terms", terms},
                        {"owned", join_terms(plan.groups[k].owned)},
                        {"h_max", b.h_max},
                        {"term_count", b.term_count},
                        {"epsilon", b.epsilon},
                        {"raw", b.raw},
                        {"estimated", b.estimated},
                        {"prescribed", b.prescribed}});
    }
    out << json{{"strategy", strategy_name(plan.strategy)},
                {"rows", rows},
                {"total_estimated", plan.total_estimated},
                {"total_prescribed", plan.total_prescribed},
                {"baseline", plan.baseline}}
               .dump(2)
        << '\n';
}

void cmd_compile(const Options &o) {
    ExperimentConfig cfg = load(o);
    if (o.opt_level != 0 && o.opt_level != 1) {
        throw ConfigError("--opt-level must be 0 or 1");
    }
    Circuit compiled = o.native ? compile_native(cfg.ansatz, o.opt_level) : cfg.ansatz;
    Sink sink(o, "compiled.circ");
    sink.stream() << serialize(compiled);
    if (!o.report) {
        return;
    }
    GateCounts before = count_gates(cfg.ansatz);
    GateCounts after = count_gates(compiled);
    std::ostream &rep = o.out.empty() ? std::cerr : std::cout;
    rep << "metric,before,after\n"
        << "xx," << before.xx << ',' << after.xx << '\n'
        << "rx," << before.rx << ',' << after.rx << '\n'
        << "ry," << before.ry << ',' << after.ry << '\n'
        << "rz," << before.rz << ',' << after.rz << '\n'
        << "other," << before.other << ',' << after.other << '\n'
        << "two_qubit," << cfg.ansatz.two_qubit_count() << ',' << compiled.two_qubit_count() << '\n'
        << "total," << before.total << ',' << after.total << '\n'
        << "depth," << cfg.ansatz.depth() << ',' << compiled.depth() << '\n';
}

void cmd_run(const Options &o) {
    ExperimentConfig cfg = load(o);
    cfg.mode = EvaluationMode::Sampled;
    Evaluator ev(cfg);
    Rng rng(cfg.seed);
    EnergyReport report = ev.evaluate(cfg.params, rng);
    {
        Sink sink(o, "records.jsonl");
        for (const MeasurementRecord &r : report.records) {
            sink.stream() << to_json(r).dump() << '\n';
        }
        json summary = to_json(report);
        summary.erase("records");
        sink.stream() << summary.dump() << '\n';
    }
    if (o.format == "csv" || !o.out.empty()) {
        Sink sink(o, "convergence.csv");
        std::ostream &out = sink.stream();
        out.precision(10);
        out << "shots,term,estimate,std_error\n";
        for (std::uint64_t s : cfg.convergence_shots) {
            ExperimentConfig run = cfg;
            run.shots = s;
            run.budget.reset();
            Rng r2(cfg.seed);
            EnergyReport rep = Evaluator(run).evaluate(cfg.params, r2);
            out << s << ",energy," << rep.energy << ',' << rep.std_error << '\n';
            for (const MeasurementRecord &rec : rep.records) {
                out << s << ',' << to_string(rec.term.string) << ',' << rec.estimate << ',' << rec.std_error << '\n';
            }
        }
    }
}

void cmd_experiment(const Options &o) {
    ExperimentConfig cfg = load(o);
    for (const std::filesystem::path &p : run_experiment(cfg, o.out.empty() ? "reports" : o.out)) {
        std::cout << p.string() << '\n';
    }
}

void cmd_calibrate(const Options &o) {
    ExperimentConfig cfg = load(o);
    double eps = calibrate_epsilon(cfg, cfg.params, o.repetitions);
    Sink sink(o, "calibration.json");
    if (o.format == "csv") {
        sink.stream() << "shots,repetitions,epsilon\n" << cfg.shots << ',' << o.repetitions << ',' << eps << '\n';
    } else {
        sink.stream() << json{{"problem", cfg.name},
                              {"shots", cfg.shots},
                              {"repetitions", o.repetitions},
                              {"epsilon", eps}}
                             .dump()
                      << '\n';
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Causal-cone reduction, shot planning and trapped-ion compilation for variational circuits"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *cmd) {
        cmd->add_option("--config", o.config, "JSON experiment configuration")->check(CLI::ExistingFile);
        cmd->add_option("--problem", o.problem, "Builtin problem instead of a configuration")
            ->check(CLI::IsMember(builtin_problem_names()));
        cmd->add_option("--out", o.out, "Output directory");
        cmd->add_option("--seed", o.seed, "Random seed");
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--strategy", o.strategy, "full, reduced-accuracy or reduced-cover")
            ->check(CLI::IsMember({"full", "reduced-accuracy", "reduced-cover"}));
    };

    CLI::App *reduce = app.add_subcommand("reduce", "Reduced circuit per Hamiltonian term");
    common(reduce);
    CLI::App *plan = app.add_subcommand("plan", "Term grouping and shot budget table");
    common(plan);
    plan->add_option("--epsilon", o.epsilon, "Target error")->check(CLI::PositiveNumber);
    plan->add_option("--epsilon-mode", o.epsilon_mode, "Budget split")
        ->check(CLI::IsMember({"total-split", "per-circuit"}));
    CLI::App *compile = app.add_subcommand("compile", "Compile the ansatz");
    common(compile);
    compile->add_flag("--native", o.native, "Translate to RX, RY, RZ and XX");
    compile->add_option("--opt-level", o.opt_level, "0: translation only, 1: peephole optimization");
    compile->add_flag("--report", o.report, "Gate counts before and after");
    CLI::App *run = app.add_subcommand("run", "Sample every measured term once");
    common(run);
    run->add_option("--shots", o.shots, "Shots per term")->check(CLI::PositiveNumber);
    run->add_option("--noise", o.noise, "Noise model")->check(CLI::IsMember({"off", "default", "file"}));
    run->add_option("--noise-file", o.noise_file, "JSON noise model for --noise file");
    run->add_flag("--readout-correct", o.readout_correct, "Invert the readout confusion matrices");
    run->add_option("--epsilon", o.epsilon, "Plan shots for this target error")->check(CLI::PositiveNumber);
    run->add_flag("--prescribed", o.prescribed, "Use rounded shot counts");
    CLI::App *experiment = app.add_subcommand("experiment", "Strategy sweep with reports and convergence tables");
    common(experiment);
    CLI::App *calibrate = app.add_subcommand("calibrate", "Empirical error of the full strategy");
    common(calibrate);
    calibrate->add_option("--shots", o.shots, "Shots per term")->check(CLI::PositiveNumber);
    calibrate->add_option("--noise", o.noise, "Noise model")->check(CLI::IsMember({"off", "default", "file"}));
    calibrate->add_option("--noise-file", o.noise_file, "JSON noise model for --noise file");
    calibrate->add_option("--repetitions", o.repetitions, "Independent runs")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*reduce) {
            cmd_reduce(o);
        } else if (*plan) {
            cmd_plan(o);
        } else if (*compile) {
            cmd_compile(o);
        } else if (*run) {
            cmd_run(o);
        } else if (*experiment) {
            cmd_experiment(o);
        } else if (*calibrate) {
            cmd_calibrate(o);
        }
    } catch (const GuardError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ValidationError &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
