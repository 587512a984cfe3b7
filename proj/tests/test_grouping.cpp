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
#include <random>

#include "lightcone/benchmarks.hpp"
#include "lightcone/error.hpp"
#include "lightcone/grouping.hpp"

using namespace lightcone;

namespace {

std::vector<std::string> names(const std::vector<PauliTerm> &terms) {
    std::vector<std::string> out;
    for (const PauliTerm &t : terms) {
        out.push_back(to_string(t.string));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ReducedSet deuteron_set() {
    Problem d = *builtin_problem("deuteron");
    return reduced_set(d.ansatz, d.hamiltonian);
}

double table_epsilon() {
    return 13.125 * std::sqrt(7.0 / 3500.0);
}

/// Minimum cover size by enumerating every subset of circuits.
std::size_t brute_force_cover(const ReducedSet &rs) {
    std::size_t best = rs.circuits.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rs.circuits.size()); ++mask) {
        bool ok = true;
        for (const ReducedAnsatz &e : rs.entries) {
            bool covered = false;
            for (std::size_t c = 0; c < rs.circuits.size(); ++c) {
                covered = covered || (((mask >> c) & 1) && measurable_on(e, rs.circuits[c]));
            }
            ok = ok && covered;
        }
        if (ok) {
            best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
        }
    }
    return best;
}

}  // namespace

TEST(grouping, deuteron_table_rows) {
    std::vector<SubHamiltonian> groups = group_all(deuteron_set());
    ASSERT_EQ(groups.size(), 6u);
    using V = std::vector<std::string>;
    EXPECT_EQ(names(groups[0].terms), (V{"X0 X1", "Y0 Y1", "Z0", "Z1"}));
    EXPECT_EQ(names(groups[1].terms), (V{"X1 X2", "X2 X3", "Y1 Y2", "Y2 Y3", "Z1", "Z2", "Z3"}));
    EXPECT_EQ(names(groups[2].terms), (V{"X2 X3", "Y2 Y3", "Z2", "Z3"}));
    EXPECT_EQ(names(groups[3].terms), (V{"Z0"}));
    EXPECT_EQ(names(groups[4].terms), (V{"Z1"}));
    EXPECT_EQ(names(groups[5].terms), (V{"Z3"}));
    std::size_t owned = 0;
    for (const SubHamiltonian &g : groups) {
        owned += g.owned.size();
    }
    EXPECT_EQ(owned, 10u);
}

TEST(grouping, deuteron_cover) {
    ReducedSet rs = deuteron_set();
    std::vector<SubHamiltonian> cover = minimal_cover(rs);
    ASSERT_EQ(cover.size(), 2u);
    EXPECT_EQ(cover[0].circuit, 0u);
    EXPECT_EQ(cover[1].circuit, 1u);
    using V = std::vector<std::string>;
    EXPECT_EQ(names(cover[0].owned), (V{"X0 X1", "Y0 Y1", "Z0", "Z1"}));
    EXPECT_EQ(cover[0].owned.size() + cover[1].owned.size(), 10u);
    EXPECT_EQ(brute_force_cover(rs), 2u);
}

TEST(grouping, dragon) {
    Problem q = *builtin_problem("dragon");
    ReducedSet rs = reduced_set(q.ansatz, q.hamiltonian);
    std::vector<SubHamiltonian> groups = group_all(rs);
    ASSERT_EQ(groups.size(), 5u);
    for (const SubHamiltonian &g : groups) {
        EXPECT_EQ(g.terms.size(), 1u);
        EXPECT_EQ(g.owned.size(), 1u);
    }
    std::vector<SubHamiltonian> cover = minimal_cover(rs);
    EXPECT_EQ(cover.size(), brute_force_cover(rs));
    EXPECT_EQ(cover.size(), 5u);
}

TEST(grouping, single_term) {
    Circuit c = deuteron_ansatz();
    ReducedSet rs = reduced_set(c, parse_hamiltonian("2.0 - 1.5 Z3", 4));
    EXPECT_EQ(group_all(rs).size(), 1u);
    ASSERT_EQ(minimal_cover(rs).size(), 1u);
    EXPECT_EQ(minimal_cover(rs)[0].owned.size(), 1u);
}

TEST(grouping, table_shot_estimates) {
    std::vector<SubHamiltonian> groups = group_all(deuteron_set());
    const double eps = table_epsilon();
    std::vector<std::uint64_t> estimated;
    std::vector<std::uint64_t> prescribed;
    for (const SubHamiltonian &g : groups) {
        ShotEstimate e = estimate_shots(g, eps);
        estimated.push_back(e.estimated);
        prescribed.push_back(e.prescribed);
    }
    EXPECT_EQ(estimated, (std::vector<std::uint64_t>{436, 3500, 2000, 1, 109, 500}));
    EXPECT_EQ(prescribed, (std::vector<std::uint64_t>{500, 3500, 2000, 1, 500, 500}));
    ShotEstimate first = estimate_shots(groups[0], eps);
    EXPECT_EQ(first.term_count, 4u);
    EXPECT_DOUBLE_EQ(first.h_max, 6.125);
}

TEST(grouping, epsilon_back_solve_consistent_across_rows) {
    std::vector<SubHamiltonian> groups = group_all(deuteron_set());
    const std::uint64_t table[] = {436, 3500, 2000, 1, 109, 500};
    for (std::size_t row : {0, 1, 2, 4, 5}) {
        ShotEstimate probe = estimate_shots(groups[row], 1.0);
        double eps = std::sqrt(probe.raw / static_cast<double>(table[row]));
        for (std::size_t other : {0, 1, 2, 4, 5}) {
            double s = estimate_shots(groups[other], eps).raw;
            EXPECT_NEAR(s, static_cast<double>(table[other]), 0.006 * static_cast<double>(table[other]) + 1.0)
                << row << " -> " << other;
        }
    }
}

TEST(grouping, estimator_properties) {
    SubHamiltonian sub{0, {{2.0, PauliString::single(0, Pauli::Z)}, {-1.0, PauliString::single(1, Pauli::Z)}}, {}};
    double prev = estimate_shots(sub, 0.1).raw;
    for (double eps : {0.2, 0.4, 0.8}) {
        double cur = estimate_shots(sub, eps).raw;
        EXPECT_LT(cur, prev);
        prev = cur;
    }
    SubHamiltonian bigger = sub;
    bigger.terms.push_back({0.5, PauliString::single(2, Pauli::Z)});
    EXPECT_GT(estimate_shots(bigger, 0.3).raw, estimate_shots(sub, 0.3).raw);
    ShotEstimate limit = estimate_shots(sub, 1e9);
    EXPECT_EQ(limit.estimated, 1u);
    EXPECT_EQ(limit.prescribed, 1u);
    ShotEstimate floored = estimate_shots(sub, 0.4);
    EXPECT_EQ(floored.prescribed, 500u);
    EXPECT_THROW(estimate_shots(sub, 0.0), ValidationError);
    EXPECT_THROW(estimate_shots(SubHamiltonian{}, 0.1), ValidationError);
}

TEST(grouping, dragon_budget) {
    Problem q = *builtin_problem("dragon");
    ReducedSet rs = reduced_set(q.ansatz, q.hamiltonian);
    ShotPlan plan = plan_shots(rs, Strategy::ReducedCover, 0.034, EpsilonMode::TotalSplit, 5000);
    ASSERT_EQ(plan.budgets.size(), 5u);
    for (const ShotEstimate &b : plan.budgets) {
        EXPECT_EQ(b.estimated, 1082u);
        EXPECT_EQ(b.prescribed, 1100u);
    }
    EXPECT_EQ(plan.total_estimated, 5410u);
    EXPECT_EQ(plan.total_prescribed, 5500u);
    EXPECT_EQ(plan.baseline, 25000u);
    EXPECT_EQ(total_budget(std::span<const ShotEstimate>{}), 0u);
}

TEST(grouping, strategy_names) {
    for (Strategy s : {Strategy::Full, Strategy::ReducedAccuracy, Strategy::ReducedCover}) {
        EXPECT_EQ(strategy_from_name(strategy_name(s)), s);
    }
    EXPECT_THROW(strategy_from_name("fastest"), ConfigError);
}
