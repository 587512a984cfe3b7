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

#include "lightcone/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <limits>

#include "lightcone/error.hpp"

namespace lightcone {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Full:
            return "full";
        case Strategy::ReducedAccuracy:
            return "reduced-accuracy";
        case Strategy::ReducedCover:
            return "reduced-cover";
    }
    return "?";
}

Strategy strategy_from_name(const std::string &name) {
    for (Strategy s : {Strategy::Full, Strategy::ReducedAccuracy, Strategy::ReducedCover}) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    throw ConfigError("unknown strategy '" + name + "' (expected full, reduced-accuracy or reduced-cover)");
}

bool measurable_on(const ReducedAnsatz &entry, const ReducedCircuit &circuit) {
    for (Qubit q : entry.term.support()) {
        if (!circuit.relabel.contains(q)) {
            return false;
        }
    }
    return std::includes(circuit.cone_gates.begin(), circuit.cone_gates.end(), entry.term_cone.begin(),
                         entry.term_cone.end());
}

namespace {

std::vector<PauliTerm> listed_terms(const ReducedSet &reduced, std::size_t c) {
    std::vector<PauliTerm> out;
    for (const ReducedAnsatz &e : reduced.entries) {
        if (measurable_on(e, reduced.circuits[c])) {
            out.push_back(e.term);
        }
    }
    return out;
}

void check_covered(const ReducedSet &reduced) {
    if (reduced.term_circuit.size() != reduced.entries.size()) {
        throw ValidationError("reduced set has an uncovered term");
    }
}

}  // namespace

std::vector<SubHamiltonian> group_all(const ReducedSet &reduced) {
    check_covered(reduced);
    std::vector<SubHamiltonian> out;
    for (std::size_t c = 0; c < reduced.circuits.size(); ++c) {
        SubHamiltonian sub{c, listed_terms(reduced, c), {}};
        for (std::size_t k = 0; k < reduced.entries.size(); ++k) {
            if (reduced.term_circuit[k] == c) {
                sub.owned.push_back(reduced.entries[k].term);
            }
        }
        out.push_back(std::move(sub));
    }
    return out;
}

namespace {

struct CoverSearch {
    std::vector<std::uint64_t> covers;
    std::uint64_t universe = 0;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();

    void run(std::uint64_t covered) {
        if (covered == universe) {
            if (chosen.size() < best_size) {
                best_size = chosen.size();
                best = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best_size) {
            return;
        }
        int term = std::countr_zero(universe & ~covered);
        for (std::size_t c = 0; c < covers.size(); ++c) {
            if ((covers[c] >> term) & 1) {
                chosen.push_back(c);
                run(covered | covers[c]);
                chosen.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<SubHamiltonian> minimal_cover(const ReducedSet &reduced) {
    check_covered(reduced);
    const std::size_t n_terms = reduced.entries.size();
    const std::size_t n_circuits = reduced.circuits.size();
    std::vector<std::vector<bool>> supports(n_circuits, std::vector<bool>(n_terms, false));
    for (std::size_t c = 0; c < n_circuits; ++c) {
        for (std::size_t k = 0; k < n_terms; ++k) {
            supports[c][k] = measurable_on(reduced.entries[k], reduced.circuits[c]);
        }
    }
    for (std::size_t k = 0; k < n_terms; ++k) {
        bool any = false;
        for (std::size_t c = 0; c < n_circuits; ++c) {
            any = any || supports[c][k];
        }
        if (!any) {
            throw ValidationError("term " + to_string(reduced.entries[k].term) + " is not measurable on any circuit");
        }
    }

    std::vector<std::size_t> selected;
    if (n_terms <= 64 && n_circuits <= 48) {
        CoverSearch search;
        search.universe = n_terms == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_terms) - 1;
        for (std::size_t c = 0; c < n_circuits; ++c) {
            std::uint64_t m = 0;
            for (std::size_t k = 0; k < n_terms; ++k) {
                m |= static_cast<std::uint64_t>(supports[c][k]) << k;
            }
            search.covers.push_back(m);
        }
        if (n_terms > 0) {
            search.run(0);
        }
        selected = search.best;
    } else {
        std::vector<bool> covered(n_terms, false);
        std::size_t remaining = n_terms;
        while (remaining > 0) {
            std::size_t best_c = 0;
            std::size_t best_gain = 0;
            for (std::size_t c = 0; c < n_circuits; ++c) {
                std::size_t gain = 0;
                for (std::size_t k = 0; k < n_terms; ++k) {
                    gain += supports[c][k] && !covered[k];
                }
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            selected.push_back(best_c);
            for (std::size_t k = 0; k < n_terms; ++k) {
                if (supports[best_c][k] && !covered[k]) {
                    covered[k] = true;
                    --remaining;
                }
            }
        }
    }
    std::sort(selected.begin(), selected.end());

    std::vector<SubHamiltonian> out;
    for (std::size_t c : selected) {
        out.push_back(SubHamiltonian{c, listed_terms(reduced, c), {}});
    }
    for (std::size_t k = 0; k < n_terms; ++k) {
        std::size_t owner = out.size();
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::size_t c = out[i].circuit;
            if (!supports[c][k]) {
                continue;
            }
            if (owner == out.size()) {
                owner = i;
                continue;
            }
            const Circuit &cand = reduced.circuits[c].circuit;
            const Circuit &cur = reduced.circuits[out[owner].circuit].circuit;
            if (cand.depth() < cur.depth() ||
                (cand.depth() == cur.depth() && cand.n_qubits() < cur.n_qubits())) {
                owner = i;
            }
        }
        out[owner].owned.push_back(reduced.entries[k].term);
    }
    return out;
}

ShotEstimate estimate_shots(const SubHamiltonian &sub, double epsilon, const RoundingPolicy &policy) {
    if (!(epsilon > 0.0)) {
        throw ValidationError("epsilon must be positive");
    }
    if (sub.terms.empty()) {
        throw ValidationError("sub-Hamiltonian has no measured terms");
    }
    ShotEstimate e;
    e.term_count = sub.terms.size();
    for (const PauliTerm &t : sub.terms) {
        e.h_max = std::max(e.h_max, std::abs(t.coefficient));
    }
    e.epsilon = epsilon;
    e.raw = static_cast<double>(e.term_count) * e.h_max * e.h_max / (epsilon * epsilon);
    const double capped = std::min(e.raw, 1e15);
    e.estimated = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(capped - 1e-9)));
    if (capped < policy.exempt_below) {
        e.prescribed = e.estimated;
    } else {
        std::uint64_t m = std::max<std::uint64_t>(1, policy.multiple);
        std::uint64_t rounded = static_cast<std::uint64_t>(std::floor(capped / static_cast<double>(m) + 0.5)) * m;
        e.prescribed = std::max({rounded, policy.floor, std::uint64_t{1}});
    }
    e.measured_terms = sub.owned.size();
    return e;
}

std::uint64_t total_budget(std::span<const ShotEstimate> budgets, bool prescribed) {
    std::uint64_t total = 0;
    for (const ShotEstimate &b : budgets) {
        total += (prescribed ? b.prescribed : b.estimated) * b.measured_terms;
    }
    return total;
}

ShotPlan plan_shots(const ReducedSet &reduced, Strategy strategy, double epsilon, EpsilonMode mode,
                    std::uint64_t baseline_shots, const RoundingPolicy &policy) {
    ShotPlan plan;
    plan.strategy = strategy;
    plan.baseline = baseline_shots * reduced.entries.size();
    if (strategy == Strategy::Full) {
        plan.total_estimated = plan.baseline;
        plan.total_prescribed = plan.baseline;
        return plan;
    }
    plan.groups = strategy == Strategy::ReducedCover ? minimal_cover(reduced) : group_all(reduced);
    std::erase_if(plan.groups, [](const SubHamiltonian &g) { return g.owned.empty(); });
    double per_circuit = epsilon;
    if (mode == EpsilonMode::TotalSplit && !plan.groups.empty()) {
        per_circuit = epsilon / std::sqrt(static_cast<double>(plan.groups.size()));
    }
    for (const SubHamiltonian &g : plan.groups) {
        plan.budgets.push_back(estimate_shots(g, per_circuit, policy));
    }
    plan.total_estimated = total_budget(plan.budgets, false);
    plan.total_prescribed = total_budget(plan.budgets, true);
    return plan;
}

}  // namespace lightcone
