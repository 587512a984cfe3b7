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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "lightcone/benchmarks.hpp"
#include "lightcone/driver.hpp"
#include "lightcone/error.hpp"
#include "lightcone/simulator.hpp"

using namespace lightcone;
using nlohmann::json;

namespace {

ParamVector random_params(const Circuit &c, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    ParamVector p;
    for (const std::string &name : c.parameters()) {
        p[name] = u(rng);
    }
    return p;
}

std::filesystem::path scratch_dir(const std::string &name) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / ("lightcone_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(driver, exact_strategies_agree) {
    std::mt19937_64 rng(3);
    for (const std::string &name : builtin_problem_names()) {
        for (bool native : {false, true}) {
            ExperimentConfig cfg = builtin_config(name);
            cfg.mode = EvaluationMode::Exact;
            cfg.native = native;
            for (int trial = 0; trial < 10; ++trial) {
                ParamVector p = random_params(cfg.ansatz, rng);
                std::vector<double> energies;
                for (Strategy s : {Strategy::Full, Strategy::ReducedAccuracy, Strategy::ReducedCover}) {
                    cfg.strategy = s;
                    EnergyReport r = evaluate(cfg, p);
                    EXPECT_NEAR(r.energy, r.exact_energy, 1e-10) << name << ' ' << strategy_name(s);
                    EXPECT_EQ(r.total_shots, 0u);
                    energies.push_back(r.energy);
                }
                EXPECT_NEAR(energies[0], energies[1], 1e-10);
                EXPECT_NEAR(energies[0], energies[2], 1e-10);
            }
        }
    }
}

TEST(driver, reference_optima) {
    ExperimentConfig d = builtin_config("deuteron");
    d.mode = EvaluationMode::Exact;
    EXPECT_NEAR(evaluate(d, d.params).energy, -2.14, 0.01);
    ExperimentConfig q = builtin_config("dragon");
    q.mode = EvaluationMode::Exact;
    EXPECT_NEAR(evaluate(q, q.params).energy, -3.45, 0.01);
}

TEST(driver, sampled_full_deuteron_unbiased) {
    ExperimentConfig cfg = builtin_config("deuteron");
    cfg.strategy = Strategy::Full;
    cfg.shots = 5000;
    EnergyReport r = evaluate(cfg, cfg.params);
    EXPECT_NEAR(r.exact_energy, -2.14, 0.01);
    EXPECT_LT(std::abs(r.delta), 3.0 * r.std_error);
    EXPECT_EQ(r.records.size(), 10u);
    EXPECT_EQ(r.total_shots, 50000u);
    EXPECT_EQ(r.baseline_shots, 50000u);
    double recomputed = cfg.hamiltonian.identity_coefficient();
    for (const MeasurementRecord &rec : r.records) {
        recomputed += rec.term.coefficient * rec.estimate;
        std::uint64_t total = 0;
        for (const auto &[bits, n] : rec.counts) {
            total += n;
        }
        EXPECT_EQ(total, rec.shots);
    }
    EXPECT_NEAR(recomputed, r.energy, 1e-12);
}

TEST(driver, dragon_budget_total) {
    ExperimentConfig cfg = builtin_config("dragon");
    cfg.strategy = Strategy::ReducedCover;
    cfg.budget = BudgetSettings{.epsilon = 0.034, .mode = EpsilonMode::TotalSplit};
    Evaluator ev(cfg);
    ASSERT_EQ(ev.circuits().size(), 5u);
    for (const PlannedCircuit &pc : ev.circuits()) {
        EXPECT_EQ(pc.shots, 1082u);
    }
    Rng rng(1);
    EnergyReport r = ev.evaluate(cfg.params, rng);
    EXPECT_EQ(r.total_shots, 5410u);
    EXPECT_EQ(r.baseline_shots, 25000u);
    EXPECT_EQ(ev.plan()->baseline, 25000u);
}

TEST(driver, trivial_circuit) {
    ExperimentConfig cfg;
    cfg.name = "trivial";
    cfg.ansatz = Circuit(1, {});
    cfg.hamiltonian = parse_hamiltonian("1.0 Z0", 1);
    for (Strategy s : {Strategy::Full, Strategy::ReducedAccuracy, Strategy::ReducedCover}) {
        cfg.strategy = s;
        EnergyReport r = evaluate(cfg, {});
        EXPECT_DOUBLE_EQ(r.energy, 1.0);
        EXPECT_DOUBLE_EQ(r.std_error, 0.0);
    }
}

TEST(driver, determinism) {
    ExperimentConfig cfg = builtin_config("deuteron");
    cfg.noise = NoiseModel::standard(4, cfg.readout_fidelity);
    cfg.native = true;
    cfg.readout_correct = true;
    cfg.shots = 300;
    for (Strategy s : {Strategy::Full, Strategy::ReducedAccuracy, Strategy::ReducedCover}) {
        cfg.strategy = s;
        EnergyReport a = evaluate(cfg, cfg.params);
        EnergyReport b = evaluate(cfg, cfg.params);
        EXPECT_EQ(a.records, b.records);
        EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    }
}

TEST(driver, optimizer_restarts_reach_deuteron_minimum) {
    ExperimentConfig cfg = builtin_config("deuteron");
    cfg.mode = EvaluationMode::Exact;
    cfg.strategy = Strategy::ReducedCover;
    cfg.optimizer = OptimizerSettings{};
    cfg.optimizer->restarts = 20;
    cfg.seed = 11;
    OptimizeResult r = optimize(cfg);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.energy, -2.14, 0.01);
    std::size_t finished = 0;
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
        bool last = k + 1 == r.trace.size() || r.trace[k + 1].restart != r.trace[k].restart;
        if (last) {
            EXPECT_LE(r.trace[k].energy, -2.13) << "start " << r.trace[k].restart;
            ++finished;
        }
    }
    EXPECT_EQ(finished, 20u);
}

TEST(driver, optimizer_dragon) {
    ExperimentConfig cfg = builtin_config("dragon");
    cfg.mode = EvaluationMode::Exact;
    cfg.optimizer = OptimizerSettings{};
    cfg.optimizer->initial = ParamVector{{"gamma", 1.2}, {"beta", 2.3}};
    OptimizeResult r = optimize(cfg);
    EXPECT_NEAR(r.energy, -3.45, 0.01);
    ExperimentConfig check = builtin_config("dragon");
    check.mode = EvaluationMode::Exact;
    EXPECT_NEAR(evaluate(check, r.best).energy, r.energy, 1e-12);
}

TEST(driver, optimizer_constant_objective) {
    ExperimentConfig cfg = builtin_config("deuteron");
    cfg.hamiltonian = parse_hamiltonian("3.5", 4);
    cfg.mode = EvaluationMode::Exact;
    cfg.optimizer = OptimizerSettings{};
    OptimizeResult r = optimize(cfg);
    EXPECT_DOUBLE_EQ(r.energy, 3.5);
    EXPECT_EQ(r.evaluations, 4u);
    EXPECT_TRUE(r.converged);
}

TEST(driver, maximize_flips_sign) {
    ExperimentConfig cfg = builtin_config("deuteron");
    cfg.mode = EvaluationMode::Exact;
    cfg.objective = Objective::Maximize;
    cfg.optimizer = OptimizerSettings{};
    cfg.optimizer->restarts = 3;
    OptimizeResult r = optimize(cfg);
    EXPECT_GT(r.energy, 0.0);
}

TEST(driver, calibrate_epsilon) {
    ExperimentConfig cfg = builtin_config("deuteron");
    cfg.shots = 2000;
    EXPECT_THROW(calibrate_epsilon(cfg, cfg.params, 1), ValidationError);
    double eps = calibrate_epsilon(cfg, cfg.params, 60);
    StateVector psi = simulate(lightcone::bind(cfg.ansatz, cfg.params));
    double predicted = 0.0;
    for (const PauliTerm &t : cfg.hamiltonian.measured_terms()) {
        double e = expectation(psi, t.string);
        predicted += t.coefficient * t.coefficient * (1.0 - e * e) / 2000.0;
    }
    predicted = std::sqrt(predicted);
    EXPECT_NEAR(eps, predicted, 0.3 * predicted);
    cfg.mode = EvaluationMode::Exact;
    EXPECT_DOUBLE_EQ(calibrate_epsilon(cfg, cfg.params, 5), 0.0);
}

TEST(driver, config_parsing) {
    ExperimentConfig cfg = config_from_json(json::parse(R"({
        "problem": "dragon",
        "strategy": "reduced-cover",
        "budget": {"epsilon": 0.034, "mode": "total-split"},
        "noise": "default",
        "seed": 9
    })"));
    EXPECT_EQ(cfg.name, "dragon");
    EXPECT_EQ(cfg.strategy, Strategy::ReducedCover);
    ASSERT_TRUE(cfg.noise);
    EXPECT_TRUE(cfg.native);
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.params, (ParamVector{{"gamma", 1.358}, {"beta", 2.462}}));

    auto message = [](const char *text) {
        try {
            config_from_json(json::parse(text));
        } catch (const ConfigError &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message(R"({"problem": "deuteron", "shots": 0})").find("shots"), std::string::npos);
    EXPECT_NE(message(R"({"problem": "deuteron", "budget": {"epsilon": -1}})").find("budget.epsilon"),
              std::string::npos);
    EXPECT_NE(message(R"({"problem": "deuteron", "noise": {"p1": 2}})").find("noise"), std::string::npos);
    EXPECT_NE(message(R"({"problem": "deuteron", "shot": 10})").find("shot"), std::string::npos);
    EXPECT_NE(message(R"({"problem": "helium"})").find("problem"), std::string::npos);
    EXPECT_NE(message(R"({"problem": "deuteron", "params": {"phi": 1}, "optimizer": {}})").find("params"),
              std::string::npos);
    EXPECT_NE(message(R"({"problem": "deuteron", "params": {"phi": 1}})").find("lambda1"), std::string::npos);
    EXPECT_NE(message(R"({"strategy": "full"})").find("problem"), std::string::npos);
    EXPECT_THROW(config_from_json(json::parse(R"({"problem": "deuteron", "strategy": "fast"})")), ConfigError);
}

TEST(driver, config_from_files) {
    std::filesystem::path dir = scratch_dir("files");
    std::ofstream(dir / "bell.circ") << "qubits 2\nH 0\nCNOT 0 1\nRY(t) 1\n";
    std::ofstream(dir / "bell.ham") << "0.5 + 1.0 Z0 Z1 - 0.25 X0 X1\n";
    std::ofstream(dir / "noise.json") << R"({"p1": 0.01, "p2": 0.02, "readout_flip": [0.01, 0.02]})";
    std::ofstream(dir / "config.json") << R"({
        "problem": {"circuit": "bell.circ", "hamiltonian": "bell.ham"},
        "mode": "exact",
        "noise": {"file": "noise.json"},
        "params": {"t": 0.3}
    })";
    ExperimentConfig cfg = load_config(dir / "config.json");
    EXPECT_EQ(cfg.name, "bell");
    ASSERT_TRUE(cfg.noise);
    EXPECT_DOUBLE_EQ(cfg.noise->readout.at(1).m[0][1], 0.02);
    EnergyReport r = evaluate(cfg, cfg.params);
    EXPECT_NEAR(r.energy, r.exact_energy, 1e-12);

    std::ofstream(dir / "bad.json") << R"({"problem": "deuteron",)";
    EXPECT_THROW(load_config(dir / "bad.json"), ConfigError);
    EXPECT_THROW(load_config(dir / "missing.json"), ConfigError);
    std::ofstream(dir / "graph.txt") << "vertices 3\nedge 0 1\nedge 1 2\n";
    std::ofstream(dir / "qaoa.json") << R"({"problem": {"graph": "graph.txt", "layers": 2}, "optimizer": {}})";
    ExperimentConfig q = load_config(dir / "qaoa.json");
    EXPECT_EQ(q.ansatz.parameters().size(), 4u);
}

TEST(driver, run_experiment_writes_reports) {
    std::filesystem::path dir = scratch_dir("experiment");
    ExperimentConfig cfg = config_from_json(json::parse(R"({
        "problem": "dragon",
        "budget": {"epsilon": 0.034, "mode": "total-split"},
        "sweep": ["full", "reduced-accuracy", "reduced-cover"],
        "convergence_shots": [100, 1000]
    })"));
    std::vector<std::filesystem::path> files = run_experiment(cfg, dir);
    ASSERT_EQ(files.size(), 6u);
    json cover = json::parse(std::ifstream(dir / "report_reduced-cover.json"));
    EXPECT_EQ(cover["report"]["total_shots"].get<std::uint64_t>(), 5410u);
    EXPECT_EQ(cover["budget"]["baseline"].get<std::uint64_t>(), 25000u);
    json full = json::parse(std::ifstream(dir / "report_full.json"));
    EXPECT_EQ(full["report"]["total_shots"].get<std::uint64_t>(), 25000u);
    std::ifstream csv(dir / "convergence_reduced-cover.csv");
    std::string header;
    std::getline(csv, header);
    EXPECT_EQ(header, "shots,kind,term,estimate,std_error,exact,abs_delta");
    std::size_t rows = 0;
    for (std::string line; std::getline(csv, line);) {
        ++rows;
    }
    EXPECT_EQ(rows, 2u * 6u);
    std::vector<std::filesystem::path> again = run_experiment(cfg, scratch_dir("experiment_again"));
    std::ifstream a(files[0]);
    std::ifstream b(again[0]);
    EXPECT_EQ(std::string(std::istreambuf_iterator<char>(a), {}), std::string(std::istreambuf_iterator<char>(b), {}));
}
