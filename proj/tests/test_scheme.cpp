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

#include <set>

#include "tomo/coverage.hpp"
#include "tomo/scheme.hpp"

using namespace tomo;

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Union of covered Pauli columns over all settings of a catalog.
std::set<std::uint64_t> covered_columns(const SettingCatalog &cat) {
    std::set<std::uint64_t> covered;
    const std::uint64_t readouts = std::uint64_t{1} << cat.n;
    for (const MeasurementSetting &m : cat.settings) {
        for (std::uint64_t j = 1; j <= readouts; ++j) {
            covered.insert(pauli_to_index(conjugate_setting(m, readout_operator(cat.n, j))));
        }
    }
    return covered;
}

}  // namespace

TEST_CASE("connectivity graphs") {
    const ConnectivityGraph chain = graph_chain(3);
    CHECK(chain.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

    CHECK(graph_complete(4).edges.size() == 6);
    CHECK(graph_grid(2, 3).edges.size() == 7);
    CHECK(graph_grid(2, 2).edges ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    CHECK(graph_chain(1).edges.empty());

    CHECK_THROWS_AS(graph_chain(0), RangeError);
    CHECK_THROWS_AS(graph_grid(0, 3), RangeError);
    CHECK_THROWS_AS(make_graph(2, {{1, 1}}), ContractError);
    CHECK_THROWS_AS(make_graph(2, {{1, 3}}), RangeError);

    // Edges are normalized, sorted, deduplicated.
    const ConnectivityGraph g = make_graph(3, {{3, 1}, {2, 1}, {1, 2}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
}

TEST_CASE("traditional catalog enumerates 3^n settings in base-3 order") {
    CHECK(catalog_traditional(1).settings.size() == 3);
    CHECK(catalog_traditional(2).settings.size() == 9);
    CHECK(catalog_traditional(3).settings.size() == 27);

    const SettingCatalog cat1 = catalog_traditional(1);
    CHECK(cat1.settings[0].name() == "I");
    CHECK(cat1.settings[1].name() == "Rx1");
    CHECK(cat1.settings[2].name() == "Ry1");

    const SettingCatalog cat2 = catalog_traditional(2);
    const char *expected[] = {"I",   "Rx2",     "Ry2",     "Rx1",     "Rx1.Rx2",
                              "Rx1.Ry2", "Ry1", "Ry1.Rx2", "Ry1.Ry2"};
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(cat2.settings[i].name() == expected[i]);
    }
}

TEST_CASE("new catalog size is 3^n + 2 |edges| 3^(n-2)") {
    CHECK(catalog_new(graph_complete(2)).settings.size() == 11);
    CHECK(catalog_new(graph_complete(3)).settings.size() == 45);
    CHECK(catalog_new(graph_chain(3)).settings.size() == 39);
    CHECK(catalog_new(graph_grid(2, 2)).settings.size() == 81 + 2 * 4 * 9);

    for (int n = 2; n <= 6; ++n) {
        const std::uint64_t edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        const std::uint64_t expected = pow_u64(3, n) + 2 * edges * pow_u64(3, n - 2);
        CHECK(catalog_new(graph_complete(n)).settings.size() == expected);
    }

    // Two-qubit blocks follow the traditional block, edge-major, YY then XY.
    const SettingCatalog cat = catalog_new(graph_complete(2));
    CHECK(cat.settings[9].name() == "YY1-2");
    CHECK(cat.settings[10].name() == "XY1-2");
}

TEST_CASE("catalog settings are pairwise distinct") {
    for (const SettingCatalog &cat :
         {catalog_new(graph_complete(3)), catalog_new(graph_chain(4)), lemma2_scheme(3)}) {
        std::set<std::string> names;
        for (const MeasurementSetting &m : cat.settings) names.insert(m.name());
        CHECK(names.size() == cat.settings.size());
    }
}

TEST_CASE("constructive scheme has size (3^n + 2n + 1)/2 and covers") {
    const std::size_t expected_sizes[] = {0, 0, 7, 17, 45, 127};
    for (int n = 2; n <= 5; ++n) {
        const SettingCatalog cat = lemma2_scheme(n);
        CHECK(cat.settings.size() == expected_sizes[n]);
        CHECK(cat.settings.size() == (pow_u64(3, n) + 2 * n + 1) / 2);
    }
    for (int n = 2; n <= 4; ++n) {
        CHECK(covered_columns(lemma2_scheme(n)).size() == pauli_index_count(n));
    }
    CHECK_THROWS_AS(lemma2_scheme(1), RangeError);
}

TEST_CASE("traditional catalog covers all of Pauli space") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(covered_columns(catalog_traditional(n)).size() == pauli_index_count(n));
    }
}

TEST_CASE("catalog hash is stable and order-sensitive") {
    const SettingCatalog a = catalog_new(graph_complete(2));
    const SettingCatalog b = catalog_new(graph_complete(2));
    CHECK(catalog_hash(a) == catalog_hash(b));
    CHECK(catalog_hash(a).size() == 16);

    SettingCatalog swapped = a;
    std::swap(swapped.settings[0], swapped.settings[1]);
    CHECK(catalog_hash(swapped) != catalog_hash(a));

    CHECK(catalog_hash(catalog_traditional(2)) != catalog_hash(a));
}
