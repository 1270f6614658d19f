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

#include "tomo/coverage.hpp"

#include <algorithm>
#include <set>

namespace tomo {

PauliString readout_operator(int n, std::uint64_t j) {
    const std::uint64_t count = std::uint64_t{1} << n;
    if (j < 1 || j > count) {
        throw RangeError("readout operator index " + std::to_string(j) + " out of range [1, " +
                         std::to_string(count) + "]");
    }
    PauliString p = PauliString::identity(n);
    for (int qubit = 1; qubit <= n; ++qubit) {
        if ((j - 1) >> (n - qubit) & 1) p.set_factor(qubit, Pauli::Z);
    }
    return p;
}

CoverageMatrix build_coverage(const SettingCatalog &c) {
    CoverageMatrix m;
    m.n = c.n;
    m.rows = static_cast<int>(c.settings.size());
    m.cols = pauli_index_count(c.n);
    m.row_entries.resize(c.settings.size());
    m.row_labels.reserve(c.settings.size());

    const std::uint64_t readouts = std::uint64_t{1} << c.n;
    for (std::size_t i = 0; i < c.settings.size(); ++i) {
        const MeasurementSetting &setting = c.settings[i];
        m.row_labels.push_back(setting.name());
        auto &entries = m.row_entries[i];
        entries.reserve(readouts);
        for (std::uint64_t j = 1; j <= readouts; ++j) {
            const PauliString lambda = conjugate_setting(setting, readout_operator(c.n, j));
            entries.emplace_back(pauli_to_index(lambda), lambda.sign);
        }
        std::sort(entries.begin(), entries.end());
        // Conjugation is a bijection on Pauli strings, so columns are distinct.
        for (std::size_t e = 1; e < entries.size(); ++e) {
            if (entries[e].first == entries[e - 1].first) {
                throw ContractError("duplicate column in coverage row " + setting.name());
            }
        }
    }
    return m;
}

void write_coverage_csv(const CoverageMatrix &m, std::ostream &out) {
    std::vector<int> all(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) all[i] = i + 1;
    write_coverage_csv(m, all, out);
}

void write_coverage_csv(const CoverageMatrix &m, const std::vector<int> &selected,
                        std::ostream &out) {
    out << "setting";
    for (std::uint64_t col = 1; col <= m.cols; ++col) {
        out << ',' << m.col_label(col);
    }
    out << '\n';
    for (int row : selected) {
        if (row < 1 || row > m.rows) {
            throw RangeError("row index " + std::to_string(row) + " out of range");
        }
        out << m.row_labels[row - 1];
        std::vector<int> dense(m.cols, 0);
        for (const auto &[col, sign] : m.row_entries[row - 1]) {
            dense[col - 1] = sign;
        }
        for (std::uint64_t col = 1; col <= m.cols; ++col) {
            out << ',' << dense[col - 1];
        }
        out << '\n';
    }
}

TomographyPlan make_plan(const SettingCatalog &catalog, const std::vector<int> &selected) {
    TomographyPlan plan;
    plan.n = catalog.n;
    plan.provenance = catalog.provenance;
    plan.catalog_hash = catalog_hash(catalog);
    plan.catalog_rows = static_cast<int>(catalog.settings.size());
    plan.selected = selected;
    std::sort(plan.selected.begin(), plan.selected.end());

    const std::uint64_t readouts = std::uint64_t{1} << catalog.n;
    std::set<std::uint64_t> covered;
    for (int row : plan.selected) {
        if (row < 1 || row > plan.catalog_rows) {
            throw RangeError("selected row " + std::to_string(row) + " out of range");
        }
        const MeasurementSetting &setting = catalog.settings[row - 1];
        plan.settings.push_back(setting);
        std::vector<std::pair<std::uint64_t, int>> map;
        map.reserve(readouts);
        for (std::uint64_t j = 1; j <= readouts; ++j) {
            const PauliString lambda = conjugate_setting(setting, readout_operator(catalog.n, j));
            map.emplace_back(pauli_to_index(lambda), lambda.sign);
            covered.insert(map.back().first);
        }
        plan.mu_map.push_back(std::move(map));
    }

    if (covered.size() != pauli_index_count(catalog.n)) {
        std::vector<std::string> uncovered;
        for (std::uint64_t col = 1; col <= pauli_index_count(catalog.n); ++col) {
            if (!covered.count(col)) uncovered.push_back(pauli_label(catalog.n, col));
        }
        const std::string msg = "plan leaves " + std::to_string(uncovered.size()) +
                                " coefficients undetermined (first: " + uncovered.front() + ")";
        throw InfeasibleError(msg, std::move(uncovered));
    }
    return plan;
}

}  // namespace tomo
