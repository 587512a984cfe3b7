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

#include <fstream>
#include <set>
#include <sstream>

#include "lightcone/benchmarks.hpp"
#include "lightcone/driver.hpp"
#include "lightcone/error.hpp"

namespace lightcone {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &path, const std::string &message) {
    throw ConfigError(path + ": " + message);
}

void check_keys(const json &obj, const std::string &path, const std::set<std::string> &allowed) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    for (const auto &[key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            fail(path.empty() ? key : path + "." + key, "unknown key");
        }
    }
}

std::string child(const std::string &path, const std::string &key) {
    return path.empty() ? key : path + "." + key;
}

double number(const json &obj, const std::string &path) {
    if (!obj.is_number()) {
        fail(path, "expected a number");
    }
    return obj.get<double>();
}

std::uint64_t positive_count(const json &obj, const std::string &path) {
    if (!obj.is_number_integer() || obj.get<std::int64_t>() <= 0) {
        fail(path, "expected a positive integer");
    }
    return obj.get<std::uint64_t>();
}

std::string text(const json &obj, const std::string &path) {
    if (!obj.is_string()) {
        fail(path, "expected a string");
    }
    return obj.get<std::string>();
}

bool flag(const json &obj, const std::string &path) {
    if (!obj.is_boolean()) {
        fail(path, "expected true or false");
    }
    return obj.get<bool>();
}

std::string read_file(const std::filesystem::path &file, const std::string &path) {
    std::ifstream in(file);
    if (!in) {
        fail(path, "cannot read " + file.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParamVector param_values(const json &obj, const std::string &path) {
    if (!obj.is_object()) {
        fail(path, "expected an object of parameter values");
    }
    ParamVector out;
    for (const auto &[key, value] : obj.items()) {
        out[key] = number(value, child(path, key));
    }
    return out;
}

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &file) {
    std::filesystem::path p(file);
    return p.is_absolute() ? p : base / p;
}

void load_problem(ExperimentConfig &cfg, const json &obj, const std::filesystem::path &base) {
    const std::string path = "problem";
    if (obj.is_string()) {
        std::optional<Problem> p = builtin_problem(obj.get<std::string>());
        if (!p) {
            fail(path, "unknown builtin problem '" + obj.get<std::string>() + "'");
        }
        cfg.name = p->name;
        cfg.ansatz = p->ansatz;
        cfg.hamiltonian = p->hamiltonian;
        cfg.reference_params = p->reference_params;
        cfg.readout_fidelity = p->readout_fidelity;
        return;
    }
    check_keys(obj, path, {"builtin", "circuit", "hamiltonian", "graph", "layers", "readout_fidelity", "name"});
    std::size_t layers = obj.contains("layers") ? positive_count(obj["layers"], child(path, "layers")) : 1;
    const int sources = int(obj.contains("builtin")) + int(obj.contains("graph")) + int(obj.contains("circuit"));
    if (sources != 1) {
        fail(path, "give exactly one of builtin, graph, or circuit with hamiltonian");
    }
    try {
        if (obj.contains("builtin")) {
            std::string name = text(obj["builtin"], child(path, "builtin"));
            std::optional<Problem> p = builtin_problem(name);
            if (!p) {
                fail(child(path, "builtin"), "unknown builtin problem '" + name + "'");
            }
            cfg.name = p->name;
            cfg.hamiltonian = p->hamiltonian;
            cfg.readout_fidelity = p->readout_fidelity;
            if (layers == 1) {
                cfg.ansatz = p->ansatz;
                cfg.reference_params = p->reference_params;
            } else if (name == "dragon") {
                cfg.ansatz = qaoa_ansatz(dragon_graph(), layers);
            } else {
                fail(child(path, "layers"), "only QAOA problems take layers");
            }
        } else if (obj.contains("graph")) {
            std::string file = text(obj["graph"], child(path, "graph"));
            Graph g = parse_graph(read_file(resolve(base, file), child(path, "graph")));
            cfg.name = std::filesystem::path(file).stem().string();
            cfg.ansatz = qaoa_ansatz(g, layers);
            cfg.hamiltonian = maxcut_hamiltonian(g);
        } else {
            if (!obj.contains("hamiltonian")) {
                fail(path, "a circuit problem needs a hamiltonian file");
            }
            if (obj.contains("layers")) {
                fail(child(path, "layers"), "only QAOA problems take layers");
            }
            std::string cfile = text(obj["circuit"], child(path, "circuit"));
            std::string hfile = text(obj["hamiltonian"], child(path, "hamiltonian"));
            cfg.ansatz = parse_circuit(read_file(resolve(base, cfile), child(path, "circuit")));
            cfg.hamiltonian =
                parse_hamiltonian(read_file(resolve(base, hfile), child(path, "hamiltonian")), cfg.ansatz.n_qubits());
            cfg.name = std::filesystem::path(cfile).stem().string();
        }
    } catch (const ParseError &e) {
        fail(path, e.what());
    } catch (const ValidationError &e) {
        fail(path, e.what());
    }
    if (obj.contains("readout_fidelity")) {
        cfg.readout_fidelity = number(obj["readout_fidelity"], child(path, "readout_fidelity"));
    }
    if (obj.contains("name")) {
        cfg.name = text(obj["name"], child(path, "name"));
    }
}

EpsilonMode epsilon_mode_from_name(const std::string &name, const std::string &path) {
    if (name == "total-split") {
        return EpsilonMode::TotalSplit;
    }
    if (name == "per-circuit") {
        return EpsilonMode::PerCircuit;
    }
    fail(path, "expected total-split or per-circuit");
}

BudgetSettings load_budget(const json &obj, const std::string &path) {
    check_keys(obj, path, {"epsilon", "mode", "counts", "rounding"});
    BudgetSettings b;
    if (!obj.contains("epsilon")) {
        fail(child(path, "epsilon"), "required");
    }
    b.epsilon = number(obj["epsilon"], child(path, "epsilon"));
    if (obj.contains("mode")) {
        b.mode = epsilon_mode_from_name(text(obj["mode"], child(path, "mode")), child(path, "mode"));
    }
    if (obj.contains("counts")) {
        std::string c = text(obj["counts"], child(path, "counts"));
        if (c != "estimated" && c != "prescribed") {
            fail(child(path, "counts"), "expected estimated or prescribed");
        }
        b.use_prescribed = c == "prescribed";
    }
    if (obj.contains("rounding")) {
        const std::string rp = child(path, "rounding");
        const json &r = obj["rounding"];
        check_keys(r, rp, {"multiple", "floor", "exempt_below"});
        if (r.contains("multiple")) {
            b.rounding.multiple = positive_count(r["multiple"], child(rp, "multiple"));
        }
        if (r.contains("floor")) {
            b.rounding.floor = positive_count(r["floor"], child(rp, "floor"));
        }
        if (r.contains("exempt_below")) {
            b.rounding.exempt_below = number(r["exempt_below"], child(rp, "exempt_below"));
        }
    }
    return b;
}

OptimizerSettings load_optimizer(const json &obj, const std::string &path) {
    check_keys(obj, path,
               {"initial", "scale", "max_iterations", "tolerance", "restarts", "reflection", "expansion",
                "contraction", "shrink"});
    OptimizerSettings o;
    if (obj.contains("initial")) {
        o.initial = param_values(obj["initial"], child(path, "initial"));
    }
    auto set = [&](const char *key, double &field) {
        if (obj.contains(key)) {
            field = number(obj[key], child(path, key));
        }
    };
    set("scale", o.simplex.scale);
    set("tolerance", o.simplex.f_tolerance);
    set("reflection", o.simplex.reflection);
    set("expansion", o.simplex.expansion);
    set("contraction", o.simplex.contraction);
    set("shrink", o.simplex.shrink);
    if (obj.contains("max_iterations")) {
        o.simplex.max_iterations = positive_count(obj["max_iterations"], child(path, "max_iterations"));
    }
    if (obj.contains("restarts")) {
        o.restarts = positive_count(obj["restarts"], child(path, "restarts"));
    }
    try {
        o.simplex.validate();
    } catch (const ValidationError &e) {
        fail(path, e.what());
    }
    return o;
}

}  // namespace

NoiseModel noise_from_json(const json &obj, std::size_t n_qubits) {
    const std::string path = "noise";
    check_keys(obj, path, {"p1", "p2", "p_rz", "readout_fidelity", "readout_flip", "file"});
    NoiseModel nm;
    if (obj.contains("p1")) {
        nm.p1 = number(obj["p1"], child(path, "p1"));
    }
    if (obj.contains("p2")) {
        nm.p2 = number(obj["p2"], child(path, "p2"));
    }
    if (obj.contains("p_rz")) {
        nm.p_rz = number(obj["p_rz"], child(path, "p_rz"));
    }
    if (obj.contains("readout_fidelity") && obj.contains("readout_flip")) {
        fail(path, "give readout_fidelity or readout_flip, not both");
    }
    try {
        if (obj.contains("readout_fidelity")) {
            double f = number(obj["readout_fidelity"], child(path, "readout_fidelity"));
            ConfusionMatrix c = ConfusionMatrix::symmetric(flip_from_joint_fidelity(f, n_qubits));
            for (std::size_t q = 0; q < n_qubits; ++q) {
                nm.readout[static_cast<Qubit>(q)] = c;
            }
        }
        if (obj.contains("readout_flip")) {
            const json &flip = obj["readout_flip"];
            const std::string fp = child(path, "readout_flip");
            if (flip.is_array()) {
                if (flip.size() != n_qubits) {
                    fail(fp, "expected one flip probability per qubit");
                }
                for (std::size_t q = 0; q < n_qubits; ++q) {
                    nm.readout[static_cast<Qubit>(q)] = ConfusionMatrix::symmetric(number(flip[q], fp));
                }
            } else {
                ConfusionMatrix c = ConfusionMatrix::symmetric(number(flip, fp));
                for (std::size_t q = 0; q < n_qubits; ++q) {
                    nm.readout[static_cast<Qubit>(q)] = c;
                }
            }
        }
        nm.validate();
    } catch (const ValidationError &e) {
        fail(path, e.what());
    }
    return nm;
}

void ExperimentConfig::validate() const {
    if (hamiltonian.n_qubits() != ansatz.n_qubits()) {
        throw ConfigError("problem: hamiltonian and ansatz registers differ");
    }
    if (shots == 0) {
        throw ConfigError("shots: must be positive");
    }
    if (budget && !(budget->epsilon > 0.0)) {
        throw ConfigError("budget.epsilon: must be positive");
    }
    if (opt_level != 0 && opt_level != 1) {
        throw ConfigError("opt_level: expected 0 or 1");
    }
    for (std::uint64_t s : convergence_shots) {
        if (s == 0) {
            throw ConfigError("convergence_shots: entries must be positive");
        }
    }
    if (!optimizer) {
        for (const std::string &p : ansatz.parameters()) {
            if (!params.contains(p)) {
                throw ConfigError("params: missing value for '" + p + "'");
            }
        }
    }
    if (noise) {
        try {
            noise->validate();
        } catch (const ValidationError &e) {
            throw ConfigError(std::string("noise: ") + e.what());
        }
    }
}

ExperimentConfig builtin_config(const std::string &name) {
    return config_from_json(json{{"problem", name}});
}

ExperimentConfig config_from_json(const json &obj, const std::filesystem::path &base_dir) {
    check_keys(obj, "",
               {"problem", "strategy", "mode", "objective", "shots", "budget", "noise", "readout_correct", "native",
                "opt_level", "seed", "params", "optimizer", "sweep", "convergence_shots"});
    if (!obj.contains("problem")) {
        fail("problem", "required");
    }
    ExperimentConfig cfg;
    load_problem(cfg, obj["problem"], base_dir);
    if (obj.contains("strategy")) {
        cfg.strategy = strategy_from_name(text(obj["strategy"], "strategy"));
    }
    if (obj.contains("mode")) {
        std::string m = text(obj["mode"], "mode");
        if (m != "exact" && m != "sampled") {
            fail("mode", "expected exact or sampled");
        }
        cfg.mode = m == "exact" ? EvaluationMode::Exact : EvaluationMode::Sampled;
    }
    if (obj.contains("objective")) {
        std::string o = text(obj["objective"], "objective");
        if (o != "minimize" && o != "maximize") {
            fail("objective", "expected minimize or maximize");
        }
        cfg.objective = o == "minimize" ? Objective::Minimize : Objective::Maximize;
    }
    if (obj.contains("shots")) {
        cfg.shots = positive_count(obj["shots"], "shots");
    }
    if (obj.contains("budget")) {
        cfg.budget = load_budget(obj["budget"], "budget");
    }
    if (obj.contains("noise")) {
        const json &n = obj["noise"];
        const std::size_t width = cfg.ansatz.n_qubits();
        if (n.is_string()) {
            std::string kind = n.get<std::string>();
            if (kind == "default") {
                cfg.noise = NoiseModel::standard(width, cfg.readout_fidelity);
            } else if (kind != "off") {
                fail("noise", "expected off, default, or an object");
            }
        } else if (n.is_object() && n.contains("file")) {
            if (n.size() != 1) {
                fail("noise", "a noise file cannot be combined with inline settings");
            }
            std::filesystem::path file = resolve(base_dir, text(n["file"], "noise.file"));
            json loaded;
            try {
                loaded = json::parse(read_file(file, "noise.file"));
            } catch (const json::parse_error &e) {
                fail("noise.file", e.what());
            }
            cfg.noise = noise_from_json(loaded, width);
        } else {
            cfg.noise = noise_from_json(n, width);
        }
    }
    if (obj.contains("readout_correct")) {
        cfg.readout_correct = flag(obj["readout_correct"], "readout_correct");
    }
    cfg.native = cfg.noise.has_value();
    if (obj.contains("native")) {
        cfg.native = flag(obj["native"], "native");
    }
    if (obj.contains("opt_level")) {
        const json &l = obj["opt_level"];
        if (!l.is_number_integer()) {
            fail("opt_level", "expected 0 or 1");
        }
        cfg.opt_level = l.get<int>();
    }
    if (obj.contains("seed")) {
        if (!obj["seed"].is_number_unsigned()) {
            fail("seed", "expected a non-negative integer");
        }
        cfg.seed = obj["seed"].get<std::uint64_t>();
    }
    if (obj.contains("params") && obj.contains("optimizer")) {
        fail("params", "fixed-point params and optimizer are mutually exclusive");
    }
    if (obj.contains("optimizer")) {
        cfg.optimizer = load_optimizer(obj["optimizer"], "optimizer");
    } else if (obj.contains("params")) {
        const json &p = obj["params"];
        if (p.is_string()) {
            if (p.get<std::string>() != "reference" || !cfg.reference_params) {
                fail("params", "only builtin problems have a reference point");
            }
            cfg.params = *cfg.reference_params;
        } else {
            cfg.params = param_values(p, "params");
        }
    } else if (cfg.reference_params) {
        cfg.params = *cfg.reference_params;
    }
    if (obj.contains("sweep")) {
        const json &s = obj["sweep"];
        if (!s.is_array() || s.empty()) {
            fail("sweep", "expected a non-empty list of strategies");
        }
        for (const json &e : s) {
            cfg.sweep.push_back(strategy_from_name(text(e, "sweep")));
        }
    }
    if (obj.contains("convergence_shots")) {
        const json &s = obj["convergence_shots"];
        if (!s.is_array()) {
            fail("convergence_shots", "expected a list of shot counts");
        }
        cfg.convergence_shots.clear();
        for (const json &e : s) {
            cfg.convergence_shots.push_back(positive_count(e, "convergence_shots"));
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::string body = read_file(path, path.string());
    json obj;
    try {
        obj = json::parse(body);
    } catch (const json::parse_error &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    try {
        return config_from_json(obj, path.parent_path().empty() ? "." : path.parent_path());
    } catch (const ConfigError &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace lightcone
