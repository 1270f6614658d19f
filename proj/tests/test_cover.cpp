// Copyright 2026 The tomoplan Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cover_oracle.hpp"
#include "tomo/cover.hpp"

using namespace tomo;

namespace {

bool is_valid_cover(const CoverProblem &p, const std::vector<int> &selected) {
    std::vector<bool> covered(p.num_cols, false);
    for (int row : selected) {
        for (std::uint64_t col : p.row_support[row - 1]) covered[col - 1] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

CoverProblem two_qubit_complete_problem() {
    return make_problem(build_coverage(catalog_new(graph_complete(2))));
}

}  // namespace

TEST_CASE("make_problem drops signs and keeps supports") {
    const CoverProblem p = two_qubit_complete_problem();
    CHECK(p.num_rows == 11);
    CHECK(p.num_cols == 16);
    for (const auto &sup : p.row_support) {
        CHECK(sup.size() == 4);
    }
    CHECK(p.col_label(6) == "XX");
}

TEST_CASE("make_problem rejects instances with an uncoverable column") {
    // A catalog holding only the YY setting reaches 4 of the 16 coefficients.
    SettingCatalog cat{2, Provenance::Custom, {}};
    cat.settings.emplace_back(2, std::vector<GateKind>{GateKind::Id, GateKind::Id},
                              PairGate{GateKind::YY, 1, 2});
    try {
        make_problem(build_coverage(cat));
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError &e) {
        CHECK(std::find(e.uncovered.begin(), e.uncovered.end(), "XX") != e.uncovered.end());
        CHECK(e.uncovered.size() == 12);
    }

    CHECK_THROWS_AS(make_problem(4, {{1, 2}, {2, 3}}), InfeasibleError);
    CHECK_THROWS_AS(make_problem(4, {{1, 2, 9}}), RangeError);
}

TEST_CASE("greedy produces valid deterministic covers") {
    const CoverProblem p = two_qubit_complete_problem();
    const CoverSolution a = solve_greedy(p);
    const CoverSolution b = solve_greedy(p);
    CHECK(a.status == SolveStatus::Greedy);
    CHECK(a.selected == b.selected);
    CHECK(is_valid_cover(p, a.selected));
    CHECK(a.objective <= 9);

    const CoverProblem single = make_problem(5, {{1, 2, 3, 4, 5}, {1, 2}});
    CHECK(solve_greedy(single).objective == 1);

    const CoverProblem aa3 = make_problem(build_coverage(catalog_new(graph_complete(3))));
    const CoverSolution g3 = solve_greedy(aa3);
    CHECK(is_valid_cover(aa3, g3.selected));
    CHECK(g3.objective >= 15);  // can never beat the optimum
}

TEST_CASE("solve_exact finds the reference optima for 2-qubit catalogs") {
    const CoverSolution newer = solve_exact(two_qubit_complete_problem());
    CHECK(newer.objective == 6);
    CHECK(newer.status == SolveStatus::Optimal);
    CHECK(newer.lower_bound == 6);
    CHECK(is_valid_cover(two_qubit_complete_problem(), newer.selected));

    const CoverProblem trad = make_problem(build_coverage(catalog_traditional(2)));
    const CoverSolution t = solve_exact(trad);
    CHECK(t.objective == 9);
    CHECK(t.status == SolveStatus::Optimal);
}

TEST_CASE("disjoint equal-size supports force one row per block") {
    const CoverProblem p = make_problem(
        9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}});
    const CoverSolution s = solve_exact(p);
    CHECK(s.objective == 3);
    CHECK(s.selected == std::vector<int>{1, 2, 3});
}

TEST_CASE("solve_exact matches brute force on random instances") {
    std::mt19937_64 gen(20260809);
    for (int trial = 0; trial < 60; ++trial) {
        const CoverProblem p = cover_oracle::random_problem(gen);
        const CoverSolution exact = solve_exact(p);
        const CoverSolution greedy = solve_greedy(p);
        const int oracle = cover_oracle::brute_force_optimum(p);
        INFO("trial ", trial, ": rows ", p.num_rows, " cols ", p.num_cols);
        CHECK(exact.status == SolveStatus::Optimal);
        CHECK(exact.objective == oracle);
        CHECK(exact.objective <= greedy.objective);
        CHECK(exact.lower_bound <= oracle);
        CHECK(is_valid_cover(p, exact.selected));
    }
}

TEST_CASE("solve_exact is deterministic") {
    const CoverProblem p = make_problem(build_coverage(catalog_new(graph_chain(3))));
    const CoverSolution a = solve_exact(p);
    const CoverSolution b = solve_exact(p);
    CHECK(a.selected == b.selected);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("budget exhaustion degrades to a feasible incumbent") {
    const CoverProblem p = make_problem(build_coverage(catalog_new(graph_complete(3))));
    SolveBudget tiny;
    tiny.max_nodes = 3;
    const CoverSolution s = solve_exact(p, tiny);
    CHECK(s.status == SolveStatus::Feasible);
    CHECK(is_valid_cover(p, s.selected));
    CHECK(s.lower_bound <= s.objective);

    SolveBudget bad;
    bad.max_nodes = 0;
    CHECK_THROWS_AS(solve_exact(p, bad), RangeError);
}

TEST_CASE("verify_cover reports missing Pauli labels") {
    const CoverageMatrix m = build_coverage(catalog_new(graph_complete(2)));

    const CoverReport full = verify_cover(m, {2, 3, 4, 7, 10, 11});
    CHECK(full.complete);
    CHECK(full.uncovered.empty());

    const CoverReport missing_xy = verify_cover(m, {2, 3, 4, 7, 10});
    CHECK_FALSE(missing_xy.complete);
    CHECK(std::find(missing_xy.uncovered.begin(), missing_xy.uncovered.end(), "XX") !=
          missing_xy.uncovered.end());

    const CoverageMatrix m1 = build_coverage(catalog_traditional(1));
    const CoverReport empty = verify_cover(m1, {});
    CHECK_FALSE(empty.complete);
    CHECK(empty.uncovered.size() == 4);

    CHECK_THROWS_AS(verify_cover(m, {12}), RangeError);
}
