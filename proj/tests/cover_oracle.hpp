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

// Test-only oracle: exhaustive subset enumeration for small cover instances.
// Kept independent of the production solver on purpose.

#ifndef TOMO_TESTS_COVER_ORACLE_HPP
#define TOMO_TESTS_COVER_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "tomo/cover.hpp"

namespace cover_oracle {

/// Minimum cover size by enumerating all 2^rows subsets. Requires <= 20 rows.
inline int brute_force_optimum(const tomo::CoverProblem &p) {
    const int rows = p.num_rows;
    std::vector<std::uint64_t> masks;  // column mask per row; <= 64 columns
    masks.reserve(rows);
    for (const auto &sup : p.row_support) {
        std::uint64_t m = 0;
        for (std::uint64_t col : sup) m |= std::uint64_t{1} << (col - 1);
        masks.push_back(m);
    }
    const std::uint64_t full = (p.num_cols == 64) ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << p.num_cols) - 1;
    int best = rows + 1;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << rows); ++subset) {
        const int size = std::popcount(subset);
        if (size >= best) continue;
        std::uint64_t covered = 0;
        for (int r = 0; r < rows; ++r) {
            if (subset >> r & 1) covered |= masks[r];
        }
        if (covered == full) best = size;
    }
    return best;
}

/// Deterministic random feasible instance with <= 64 columns.
inline tomo::CoverProblem random_problem(std::mt19937_64 &gen, int max_rows = 14,
                                         int max_cols = 20) {
    const int rows = 5 + static_cast<int>(gen() % (max_rows - 4));
    const int cols = 8 + static_cast<int>(gen() % (max_cols - 7));
    std::vector<std::vector<std::uint64_t>> supports(rows);
    for (int r = 0; r < rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            if (gen() % 100 < 30) supports[r].push_back(c);
        }
    }
    // Patch feasibility: give every uncovered column to a pseudo-random row.
    std::vector<bool> covered(cols, false);
    for (const auto &sup : supports) {
        for (std::uint64_t c : sup) covered[c - 1] = true;
    }
    for (int c = 1; c <= cols; ++c) {
        if (!covered[c - 1]) supports[gen() % rows].push_back(c);
    }
    return tomo::make_problem(cols, std::move(supports));
}

}  // namespace cover_oracle

#endif
