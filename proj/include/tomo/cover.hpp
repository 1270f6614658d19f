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

#ifndef TOMO_COVER_HPP
#define TOMO_COVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tomo/coverage.hpp"

namespace tomo {

/// Unsigned covering instance: for each row, the set of columns it covers
/// (the nonzero pattern of the coverage matrix). Construction fails unless
/// every column is covered by at least one row.
struct CoverProblem {
    int num_rows = 0;
    std::uint64_t num_cols = 0;
    std::vector<std::vector<std::uint64_t>> row_support;  // sorted 1-based column ids
    std::vector<std::string> row_labels;                  // optional
    std::vector<std::string> col_labels;                  // optional, size num_cols

    std::string col_label(std::uint64_t col) const;
};

CoverProblem make_problem(const CoverageMatrix &m);
CoverProblem make_problem(std::uint64_t num_cols,
                          std::vector<std::vector<std::uint64_t>> supports,
                          std::vector<std::string> col_labels = {},
                          std::vector<std::string> row_labels = {});

enum class SolveStatus {
    Optimal,   // objective proven minimal
    Feasible,  // budget exhausted; best incumbent returned
    Greedy,    // produced by the greedy heuristic
};

std::string solve_status_name(SolveStatus s);

struct SolveBudget {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 0.0;  // 0 disables the wall-clock cap
};

struct CoverSolution {
    std::vector<int> selected;  // sorted 1-based row indices
    int objective = 0;
    SolveStatus status = SolveStatus::Greedy;
    int lower_bound = 0;
    std::uint64_t nodes = 0;
};

/// Repeatedly selects the row covering the most still-uncovered columns,
/// ties broken by lowest row index.
CoverSolution solve_greedy(const CoverProblem &p);

/// Exact branch-and-bound over include/exclude decisions. Forced rows
/// (columns with a unique cover) and dominated rows (residual support
/// contained in another row's) are eliminated during search; the pruning
/// bound is |chosen| + ceil(uncovered / max residual support); branching
/// picks the row with the largest residual support (ties by lowest index).
/// On budget exhaustion the best incumbent is returned with status Feasible
/// and the proven lower bound.
CoverSolution solve_exact(const CoverProblem &p, const SolveBudget &budget = {});

struct CoverReport {
    bool complete = false;
    std::vector<std::string> uncovered;  // Pauli labels of untouched columns
};

CoverReport verify_cover(const CoverageMatrix &m, const std::vector<int> &selected);

}  // namespace tomo

#endif
