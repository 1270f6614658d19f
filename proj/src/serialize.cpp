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

#include "tomo/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tomo {

namespace {

using nlohmann::json;

// nlohmann reports a byte offset; recover the 1-based line/column.
ParseError json_parse_error(const std::string &text, const json::parse_error &err) {
    int line = 1, column = 1;
    const std::size_t limit = std::min(text.size(), err.byte > 0 ? err.byte - 1 : 0);
    for (std::size_t i = 0; i < limit; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return ParseError(err.what(), line, column);
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &err) {
        throw json_parse_error(text, err);
    }
}

json setting_to_json(const MeasurementSetting &m) {
    json gates = json::array();
    for (const ReadoutGate &g : m.gates()) {
        if (g.kind == GateKind::Id) continue;
        json entry;
        entry["kind"] = gate_kind_name(g.kind);
        entry["qubits"] = is_pair_kind(g.kind) ? json::array({g.q1, g.q2})
                                               : json::array({g.q1});
        gates.push_back(std::move(entry));
    }
    return json{{"gates", std::move(gates)}};
}

MeasurementSetting setting_from_json(int n, const json &j, std::size_t index) {
    const auto fail = [index](const std::string &what) -> ParseError {
        return ParseError("setting " + std::to_string(index + 1) + ": " + what);
    };
    if (!j.is_object() || !j.contains("gates") || !j["gates"].is_array()) {
        throw fail("expected an object with a \"gates\" array");
    }
    std::vector<GateKind> single(static_cast<std::size_t>(n), GateKind::Id);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::optional<PairGate> pair;
    for (const json &entry : j["gates"]) {
        if (!entry.contains("kind") || !entry.contains("qubits")) {
            throw fail("every gate needs \"kind\" and \"qubits\"");
        }
        const GateKind kind = gate_kind_from_name(entry["kind"].get<std::string>());
        const auto &qubits = entry["qubits"];
        for (const json &q : qubits) {
            const int qi = q.get<int>();
            if (qi < 1 || qi > n) throw fail("qubit index out of range");
            if (used[qi - 1]) throw fail("qubit " + std::to_string(qi) + " assigned twice");
            used[qi - 1] = true;
        }
        if (is_pair_kind(kind)) {
            if (qubits.size() != 2) throw fail("two-qubit gates need exactly two qubits");
            if (pair) throw fail("at most one two-qubit gate per setting");
            pair = PairGate{kind, qubits[0].get<int>(), qubits[1].get<int>()};
        } else if (kind == GateKind::RotX || kind == GateKind::RotY || kind == GateKind::Id) {
            if (qubits.size() != 1) throw fail("single-qubit gates need exactly one qubit");
            single[qubits[0].get<int>() - 1] = kind;
        } else {
            throw fail("catalog gates are limited to ID/RX/RY/YY/XY");
        }
    }
    try {
        return MeasurementSetting(n, std::move(single), pair);
    } catch (const ContractError &e) {
        throw fail(e.what());
    }
}

}  // namespace

std::string save_catalog(const SettingCatalog &c) {
    json j;
    j["format"] = "tomoplan-catalog-v1";
    j["n"] = c.n;
    j["provenance"] = provenance_name(c.provenance);
    json settings = json::array();
    for (const MeasurementSetting &m : c.settings) settings.push_back(setting_to_json(m));
    j["settings"] = std::move(settings);
    return j.dump(2) + "\n";
}

SettingCatalog load_catalog(const std::string &text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("settings")) {
        throw ParseError("catalog file needs \"n\" and \"settings\"");
    }
    SettingCatalog cat;
    cat.n = j["n"].get<int>();
    if (cat.n < 1 || cat.n > kMaxQubits) throw ParseError("qubit count out of range");
    cat.provenance =
        j.contains("provenance") ? provenance_from_name(j["provenance"].get<std::string>())
                                 : Provenance::Custom;
    const auto &settings = j["settings"];
    if (!settings.is_array() || settings.empty()) {
        throw ParseError("catalog needs a nonempty \"settings\" array");
    }
    for (std::size_t i = 0; i < settings.size(); ++i) {
        cat.settings.push_back(setting_from_json(cat.n, settings[i], i));
    }
    for (std::size_t i = 0; i < cat.settings.size(); ++i) {
        for (std::size_t k = i + 1; k < cat.settings.size(); ++k) {
            if (cat.settings[i] == cat.settings[k]) {
                throw ParseError("settings " + std::to_string(i + 1) + " and " +
                                 std::to_string(k + 1) + " are identical");
            }
        }
    }
    return cat;
}

std::string save_plan(const TomographyPlan &plan) {
    json j;
    j["format"] = "tomoplan-plan-v1";
    j["n"] = plan.n;
    j["provenance"] = provenance_name(plan.provenance);
    j["catalog_hash"] = plan.catalog_hash;
    j["catalog_rows"] = plan.catalog_rows;
    j["selected"] = plan.selected;
    json settings = json::array();
    for (const MeasurementSetting &m : plan.settings) settings.push_back(setting_to_json(m));
    j["settings"] = std::move(settings);
    json mu_map = json::array();
    for (const auto &per_setting : plan.mu_map) {
        json row = json::array();
        for (const auto &[col, sign] : per_setting) row.push_back(json::array({col, sign}));
        mu_map.push_back(std::move(row));
    }
    j["mu_map"] = std::move(mu_map);
    return j.dump(2) + "\n";
}

TomographyPlan load_plan(const std::string &text) {
    const json j = parse_json(text);
    for (const char *key : {"n", "selected", "settings", "mu_map", "catalog_hash"}) {
        if (!j.contains(key)) {
            throw ParseError(std::string("plan file is missing \"") + key + "\"");
        }
    }
    TomographyPlan plan;
    plan.n = j["n"].get<int>();
    if (plan.n < 1 || plan.n > kMaxQubits) throw ParseError("qubit count out of range");
    plan.provenance =
        j.contains("provenance") ? provenance_from_name(j["provenance"].get<std::string>())
                                 : Provenance::Custom;
    plan.catalog_hash = j["catalog_hash"].get<std::string>();
    plan.catalog_rows = j.value("catalog_rows", 0);
    plan.selected = j["selected"].get<std::vector<int>>();
    const auto &settings = j["settings"];
    for (std::size_t i = 0; i < settings.size(); ++i) {
        plan.settings.push_back(setting_from_json(plan.n, settings[i], i));
    }
    if (plan.settings.size() != plan.selected.size()) {
        throw ParseError("plan \"selected\" and \"settings\" lengths differ");
    }
    const std::uint64_t readouts = std::uint64_t{1} << plan.n;
    for (const json &row : j["mu_map"]) {
        std::vector<std::pair<std::uint64_t, int>> map;
        for (const json &cell : row) {
            if (!cell.is_array() || cell.size() != 2) {
                throw ParseError("mu_map cells must be [column, sign] pairs");
            }
            const std::uint64_t col = cell[0].get<std::uint64_t>();
            const int sign = cell[1].get<int>();
            if (col < 1 || col > pauli_index_count(plan.n) || (sign != 1 && sign != -1)) {
                throw ParseError("mu_map cell out of range");
            }
            map.emplace_back(col, sign);
        }
        if (map.size() != readouts) {
            throw ParseError("mu_map rows must have one cell per readout operator");
        }
        plan.mu_map.push_back(std::move(map));
    }
    if (plan.mu_map.size() != plan.selected.size()) {
        throw ParseError("plan \"mu_map\" and \"selected\" lengths differ");
    }
    return plan;
}

std::string save_graph(const ConnectivityGraph &g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (const auto &[k, l] : g.edges) out << k << " " << l << "\n";
    return out.str();
}

ConnectivityGraph load_graph(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first == "#") continue;
        if (first == "n") {
            if (!(ls >> n) || n < 1) throw ParseError("bad qubit count", line_no, 1);
            continue;
        }
        int k = 0, l = 0;
        try {
            k = std::stoi(first);
        } catch (const std::exception &) {
            throw ParseError("expected an edge \"k l\"", line_no, 1);
        }
        if (!(ls >> l)) throw ParseError("edge line needs two endpoints", line_no, 1);
        edges.emplace_back(k, l);
    }
    if (n < 1) throw ParseError("graph file needs an \"n <count>\" header");
    try {
        return make_graph(n, std::move(edges));
    } catch (const Error &e) {
        throw ParseError(e.what());
    }
}

std::string save_records(int n, const std::vector<MeasurementRecord> &records) {
    json j;
    j["format"] = "tomoplan-records-v1";
    j["n"] = n;
    json list = json::array();
    for (const MeasurementRecord &r : records) {
        json entry;
        entry["setting"] = r.setting_index;
        entry["expectations"] = r.expectations;
        if (r.shots) entry["shots"] = *r.shots;
        list.push_back(std::move(entry));
    }
    j["records"] = std::move(list);
    return j.dump(2) + "\n";
}

std::vector<MeasurementRecord> load_records(const std::string &text, int *n_out) {
    const json j = parse_json(text);
    if (!j.contains("n") || !j.contains("records")) {
        throw ParseError("records file needs \"n\" and \"records\"");
    }
    if (n_out) *n_out = j["n"].get<int>();
    std::vector<MeasurementRecord> out;
    for (const json &entry : j["records"]) {
        MeasurementRecord r;
        r.setting_index = entry.at("setting").get<int>();
        r.expectations = entry.at("expectations").get<std::vector<double>>();
        if (entry.contains("shots") && !entry["shots"].is_null()) {
            r.shots = entry["shots"].get<long>();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string save_state(const DensityMatrix &dm) {
    std::ostringstream out;
    out << "n " << dm.n << "\n";
    char buf[64];
    for (Eigen::Index r = 0; r < dm.rho.rows(); ++r) {
        for (Eigen::Index c = 0; c < dm.rho.cols(); ++c) {
            const std::complex<double> v = dm.rho(r, c);
            std::snprintf(buf, sizeof buf, "%.17g %.17g", v.real(), v.imag());
            out << (c ? " " : "") << buf;
        }
        out << "\n";
    }
    return out.str();
}

DensityMatrix load_state(const std::string &text) {
    std::istringstream in(text);
    std::string header;
    int n = 0;
    if (!(in >> header >> n) || header != "n" || n < 1 || n > kDenseQubitCap) {
        throw ParseError("state file needs an \"n <count>\" header");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix rho(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            double re = 0, im = 0;
            if (!(in >> re >> im)) {
                throw ParseError("state file ended before " + std::to_string(dim * dim) +
                                 " entries");
            }
            rho(r, c) = {re, im};
        }
    }
    return DensityMatrix{n, std::move(rho)};
}

std::string robustness_csv(const std::vector<RobustnessPoint> &rows) {
    std::ostringstream out;
    out << "scheme,eta,zeta,mean_infidelity,std_error,num_states,seed\n";
    char buf[160];
    for (const RobustnessPoint &r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%.12g,%.12g,%.12g,%.12g,%d,%llu\n", r.scheme.c_str(),
                      r.eta, r.zeta, r.mean_infidelity, r.std_error, r.num_states,
                      static_cast<unsigned long long>(r.seed));
        out << buf;
    }
    return out.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    if (!in.good() && !in.eof()) throw Error("error reading " + path);
    return out.str();
}

void write_file_atomic(const std::string &path, const std::string &content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out.good()) throw Error("error writing " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot rename " + tmp + " to " + path);
    }
}

}  // namespace tomo
