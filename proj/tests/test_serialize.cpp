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

#include <filesystem>

#include "tomo/cover.hpp"
#include "tomo/serialize.hpp"

using namespace tomo;

#ifndef TOMO_FIXTURE_DIR
#define TOMO_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

std::string fixture(const std::string &name) {
    return std::string(TOMO_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("catalog round-trips through text") {
    for (const SettingCatalog &cat :
         {catalog_traditional(2), catalog_new(graph_complete(3)), lemma2_scheme(3)}) {
        const SettingCatalog back = load_catalog(save_catalog(cat));
        CHECK(back == cat);
        CHECK(catalog_hash(back) == catalog_hash(cat));
    }
}

TEST_CASE("catalog parse errors carry location or context") {
    try {
        load_catalog("{\n  \"n\": 2,\n  oops\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line == 3);
        CHECK(e.column > 0);
    }

    // Schema violations name the offending setting.
    CHECK_THROWS_AS(load_catalog(R"({"n": 2, "settings": [{"gates": 3}]})"), ParseError);
    CHECK_THROWS_AS(
        load_catalog(
            R"({"n": 2, "settings": [{"gates": [{"kind": "RX", "qubits": [5]}]}]})"),
        ParseError);
    // Doubly-assigned qubit.
    CHECK_THROWS_AS(
        load_catalog(R"({"n": 2, "settings": [{"gates": [
            {"kind": "RX", "qubits": [1]},
            {"kind": "YY", "qubits": [1, 2]}]}]})"),
        ParseError);
    // Duplicate settings.
    CHECK_THROWS_AS(load_catalog(R"({"n": 1, "settings": [{"gates": []}, {"gates": []}]})"),
                    ParseError);
}

TEST_CASE("published scheme fixtures load and cover completely") {
    struct Fixture {
        const char *file;
        int n;
        std::size_t settings;
    };
    const Fixture fixtures[] = {
        {"aa_n2.json", 2, 6},  {"aa_n3.json", 3, 15}, {"aa_n4.json", 4, 35},
        {"nn_n2.json", 2, 6},  {"nn_n3.json", 3, 16}, {"nn_n4.json", 4, 39},
    };
    for (const Fixture &f : fixtures) {
        INFO(f.file);
        const SettingCatalog cat = load_catalog(read_file(fixture(f.file)));
        CHECK(cat.n == f.n);
        CHECK(cat.settings.size() == f.settings);
        const CoverageMatrix m = build_coverage(cat);
        std::vector<int> all;
        for (int i = 1; i <= m.rows; ++i) all.push_back(i);
        CHECK(verify_cover(m, all).complete);
    }

    // Spot-check the 2-qubit scheme contents.
    const SettingCatalog aa2 = load_catalog(read_file(fixture("aa_n2.json")));
    CHECK(aa2.settings[0].name() == "Rx2");
    CHECK(aa2.settings[4].name() == "YY1-2");
    CHECK(aa2.settings[5].name() == "XY1-2");
}

TEST_CASE("plan round-trips through text") {
    const SettingCatalog cat = catalog_new(graph_complete(2));
    const TomographyPlan plan = make_plan(cat, {2, 3, 4, 7, 10, 11});
    const TomographyPlan back = load_plan(save_plan(plan));
    CHECK(back.n == plan.n);
    CHECK(back.selected == plan.selected);
    CHECK(back.settings == plan.settings);
    CHECK(back.mu_map == plan.mu_map);
    CHECK(back.catalog_hash == plan.catalog_hash);

    CHECK_THROWS_AS(load_plan(R"({"n": 2})"), ParseError);
}

TEST_CASE("graph files round-trip") {
    const ConnectivityGraph g = graph_grid(2, 3);
    CHECK(load_graph(save_graph(g)) == g);

    CHECK(load_graph("n 3\n1 2\n2 3\n") == graph_chain(3));
    CHECK_THROWS_AS(load_graph("1 2\n"), ParseError);
    try {
        load_graph("n 3\n1\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("records round-trip") {
    std::vector<MeasurementRecord> records(2);
    records[0].setting_index = 2;
    records[0].expectations = {1.0, 0.25, -0.5, 0.125};
    records[1].setting_index = 10;
    records[1].expectations = {1.0, -1.0, 0.0, 1.0};
    records[1].shots = 4096;

    int n = 0;
    const auto back = load_records(save_records(2, records), &n);
    CHECK(n == 2);
    REQUIRE(back.size() == 2);
    CHECK(back[0].setting_index == 2);
    CHECK(back[0].expectations == records[0].expectations);
    CHECK(!back[0].shots);
    CHECK(back[1].shots == 4096);
}

TEST_CASE("state files round-trip at full precision") {
    const DensityMatrix rho = random_pure_state(3, 99);
    const DensityMatrix back = load_state(save_state(rho));
    CHECK(back.n == 3);
    CHECK((back.rho - rho.rho).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(load_state("nope"), ParseError);
    CHECK_THROWS_AS(load_state("n 2\n0 0\n"), ParseError);
}

TEST_CASE("atomic writes leave no temporary behind") {
    const std::string path = (std::filesystem::temp_directory_path() / "tomo_io_test.txt").string();
    write_file_atomic(path, "payload");
    CHECK(read_file(path) == "payload");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove(path);
}

TEST_CASE("robustness CSV is stable") {
    std::vector<RobustnessPoint> rows(1);
    rows[0].scheme = "new";
    rows[0].eta = 0.025;
    rows[0].zeta = 0.02;
    rows[0].mean_infidelity = 1.25e-4;
    rows[0].std_error = 2e-6;
    rows[0].num_states = 200;
    rows[0].seed = 7;
    CHECK(robustness_csv(rows) ==
          "scheme,eta,zeta,mean_infidelity,std_error,num_states,seed\n"
          "new,0.025,0.02,0.000125,2e-06,200,7\n");
}
