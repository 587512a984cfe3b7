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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lightcone/circuit.hpp"
#include "lightcone/grouping.hpp"
#include "lightcone/nelder_mead.hpp"
#include "lightcone/pauli.hpp"
#include "lightcone/sampling.hpp"

namespace lightcone {

enum class EvaluationMode {
    /// Noiseless statevector expectations; no shots drawn.
    Exact,
    /// Finite-shot sampling with the configured noise.
    Sampled,
};

enum class Objective { Minimize, Maximize };

struct BudgetSettings {
    double epsilon = 0.0;
    EpsilonMode mode = EpsilonMode::TotalSplit;
    RoundingPolicy rounding{};
    /// Run the rounded counts instead of the raw estimates.
    bool use_prescribed = false;
};

struct OptimizerSettings {
    /// Starting point of the first start; later starts are drawn uniformly from [-pi, pi].
    std::optional<ParamVector> initial;
    NelderMeadOptions simplex{};
    /// Number of independent starts.
    std::size_t restarts = 1;
};

struct ExperimentConfig {
    std::string name;
    Circuit ansatz{1, {}};
    Hamiltonian hamiltonian{1, {}};
    /// In-silico optimum for builtin problems.
    std::optional<ParamVector> reference_params;
    /// Joint readout fidelity used by the default noise model.
    double readout_fidelity = 1.0;

    Strategy strategy = Strategy::ReducedCover;
    EvaluationMode mode = EvaluationMode::Sampled;
    Objective objective = Objective::Minimize;
    /// Shots per measured term when no budget is given; also sizes the baseline.
    std::uint64_t shots = 5000;
    std::optional<BudgetSettings> budget;
    /// Noise on the full register; readout matrices are keyed by original qubit.
    std::optional<NoiseModel> noise;
    bool readout_correct = false;
    bool native = false;
    int opt_level = 1;
    std::uint64_t seed = 1;

    /// Fixed-point evaluation parameters; ignored in optimize mode.
    ParamVector params;
    /// Optimize mode when set.
    std::optional<OptimizerSettings> optimizer;

    /// Strategies run by run_experiment; empty means `strategy` alone.
    std::vector<Strategy> sweep;
    /// Shot counts for the convergence tables.
    std::vector<std::uint64_t> convergence_shots{100, 500, 1000, 5000};

    /// Throws ConfigError on inconsistent settings.
    void validate() const;
};

/// Ready-to-run configuration for a builtin problem at its reference point.
ExperimentConfig builtin_config(const std::string &name);

/// Parses a JSON configuration; relative file paths resolve against `base_dir`. Throws ConfigError naming the
/// offending key.
ExperimentConfig config_from_json(const nlohmann::json &json, const std::filesystem::path &base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path &path);

/// Noise model from a JSON object with optional keys p1, p2, p_rz and one of readout_fidelity (joint) or
/// readout_flip (scalar or per-qubit list).
NoiseModel noise_from_json(const nlohmann::json &json, std::size_t n_qubits);

/// One circuit executed by a strategy.
struct PlannedCircuit {
    std::string id;
    /// Symbolic circuit, native when the configuration asks for it.
    Circuit circuit{1, {}};
    /// Original qubit to circuit qubit.
    QubitMap relabel;
    /// Terms reported from this circuit, original labels.
    std::vector<PauliTerm> owned;
    /// `owned` on the circuit's register.
    std::vector<PauliTerm> local;
    std::uint64_t shots = 0;
    /// Noise with readout matrices relabelled onto the circuit's register.
    std::optional<NoiseModel> noise;
};

struct EnergyReport {
    Strategy strategy = Strategy::Full;
    EvaluationMode mode = EvaluationMode::Sampled;
    ParamVector params;
    /// One record per owned term, coefficient included in `term`.
    std::vector<MeasurementRecord> records;
    double energy = 0.0;
    /// Gaussian propagation of the per-term errors.
    double std_error = 0.0;
    std::uint64_t total_shots = 0;
    /// Shots the full strategy would spend at the configured per-term count.
    std::uint64_t baseline_shots = 0;
    std::size_t circuit_count = 0;
    /// Noiseless expectation on the full ansatz.
    double exact_energy = 0.0;
    double delta = 0.0;
};

/// Reduces, groups, budgets and compiles once; evaluates any number of parameter points.
class Evaluator {
   public:
    explicit Evaluator(ExperimentConfig config);

    EnergyReport evaluate(const ParamVector &params, Rng &rng) const;

    const ExperimentConfig &config() const {
        return config_;
    }
    const std::vector<PlannedCircuit> &circuits() const {
        return circuits_;
    }
    /// Present when a budget is configured for a reduced strategy.
    const std::optional<ShotPlan> &plan() const {
        return plan_;
    }

   private:
    ExperimentConfig config_;
    std::vector<PlannedCircuit> circuits_;
    std::optional<ShotPlan> plan_;
};

/// Evaluates the configuration at `params` with a generator seeded from the configuration.
EnergyReport evaluate(const ExperimentConfig &config, const ParamVector &params);

struct TracePoint {
    std::size_t restart = 0;
    std::size_t iteration = 0;
    /// Best objective so far in the start, in Hamiltonian units.
    double energy = 0.0;
};

struct OptimizeResult {
    ParamVector best;
    double energy = 0.0;
    std::vector<TracePoint> trace;
    /// False when any start exhausted its iteration budget.
    bool converged = true;
    std::size_t evaluations = 0;
};

/// Derivative-free simplex descent over the ansatz parameters; maximization flips the sign.
OptimizeResult optimize(const ExperimentConfig &config);

/// Sample standard deviation of the full-strategy energy over `repetitions` independent runs at the configured
/// shots. Zero in exact mode. Throws ValidationError for fewer than two repetitions.
double calibrate_epsilon(const ExperimentConfig &config, const ParamVector &params, std::size_t repetitions);

/// Runs every strategy of the sweep and writes `report_<strategy>.json` and `convergence_<strategy>.csv` into
/// `out_dir`. Returns the written paths.
std::vector<std::filesystem::path> run_experiment(const ExperimentConfig &config, const std::filesystem::path &out_dir);

std::string evaluation_mode_name(EvaluationMode mode);

nlohmann::json to_json(const MeasurementRecord &record);
nlohmann::json to_json(const EnergyReport &report);
nlohmann::json params_to_json(const ParamVector &params);

}  // namespace lightcone
