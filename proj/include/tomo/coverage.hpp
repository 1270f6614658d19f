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

#ifndef TOMO_COVERAGE_HPP
#define TOMO_COVERAGE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tomo/scheme.hpp"

namespace tomo {

/// Signed sparse settings x Pauli-operators matrix. Row i holds, for every
/// readout operator O in {I,Z}^n, the entry (index of M^dagger O M, sign).
/// Rows and columns are 1-based; every row has exactly 2^n entries.
struct CoverageMatrix {
    int n = 0;
    int rows = 0;
    std::uint64_t cols = 0;  // 4^n
    /// Per row: (column, sign) sorted by column.
    std::vector<std::vector<std::pair<std::uint64_t, int>>> row_entries;
    std::vector<std::string> row_labels;

    std::string col_label(std::uint64_t col) const { return pauli_label(n, col); }
};

/// The readout operator O_j, j in [1, 2^n]: base-2 digits (I, Z) with qubit 1
/// most significant.
PauliString readout_operator(int n, std::uint64_t j);

CoverageMatrix build_coverage(const SettingCatalog &c);

/// Signed CSV: header "setting,<label>,...", one row per setting with entries
/// in {-1, 0, 1}. `selected` restricts (and orders) rows by 1-based index.
void write_coverage_csv(const CoverageMatrix &m, std::ostream &out);
void write_coverage_csv(const CoverageMatrix &m, const std::vector<int> &selected,
                        std::ostream &out);

/// A chosen subset of settings plus the signed (setting, readout operator) ->
/// Pauli-index map needed to recover every coefficient.
struct TomographyPlan {
    int n = 0;
    Provenance provenance = Provenance::Custom;
    std::string catalog_hash;  // hash of the catalog the rows were selected from
    int catalog_rows = 0;
    std::vector<int> selected;                   // 1-based catalog row indices
    std::vector<MeasurementSetting> settings;    // aligned with `selected`
    /// Per selected setting, entry j-1 maps readout operator O_j to
    /// (Pauli column, sign).
    std::vector<std::vector<std::pair<std::uint64_t, int>>> mu_map;
};

/// Builds the plan for `selected` rows of the catalog. Throws InfeasibleError
/// when the chosen rows do not determine every coefficient.
TomographyPlan make_plan(const SettingCatalog &catalog, const std::vector<int> &selected);

}  // namespace tomo

#endif
