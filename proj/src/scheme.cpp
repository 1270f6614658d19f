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

#include "tomo/scheme.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace tomo {

namespace {

// Digit order for the canonical base-3 enumeration of per-qubit gates.
constexpr GateKind kSingleDigits[3] = {GateKind::Id, GateKind::RotX, GateKind::RotY};

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Base-3 assignment of {Id, RotX, RotY} to `qubits` (ascending order, first
// listed qubit most significant), written into `single`.
void assign_base3(std::vector<GateKind> &single, const std::vector<int> &qubits,
                  std::uint64_t code) {
    for (auto it = qubits.rbegin(); it != qubits.rend(); ++it) {
        single[*it - 1] = kSingleDigits[code % 3];
        code /= 3;
    }
}

}  // namespace

ConnectivityGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw RangeError("graph needs at least one qubit");
    for (auto &[k, l] : edges) {
        if (k == l) throw ContractError("graph edges cannot be self-loops");
        if (k > l) std::swap(k, l);
        if (k < 1 || l > n) throw RangeError("graph edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return ConnectivityGraph{n, std::move(edges)};
}

ConnectivityGraph graph_chain(int n) {
    if (n < 1) throw RangeError("chain needs at least one qubit");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, std::move(edges));
}

ConnectivityGraph graph_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw RangeError("grid dimensions must be positive");
    const auto at = [cols](int r, int c) { return (r - 1) * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            if (c < cols) edges.emplace_back(at(r, c), at(r, c + 1));
            if (r < rows) edges.emplace_back(at(r, c), at(r + 1, c));
        }
    }
    return make_graph(rows * cols, std::move(edges));
}

ConnectivityGraph graph_complete(int n) {
    if (n < 1) throw RangeError("complete graph needs at least one qubit");
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) edges.emplace_back(k, l);
    }
    return make_graph(n, std::move(edges));
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Traditional: return "traditional";
        case Provenance::New: return "new";
        case Provenance::Custom: return "custom";
        case Provenance::Lemma2: return "lemma2";
    }
    throw ContractError("unknown provenance");
}

Provenance provenance_from_name(const std::string &name) {
    if (name == "traditional") return Provenance::Traditional;
    if (name == "new") return Provenance::New;
    if (name == "custom") return Provenance::Custom;
    if (name == "lemma2") return Provenance::Lemma2;
    throw ParseError("unknown provenance \"" + name + "\"");
}

SettingCatalog catalog_traditional(int n) {
    if (n < 1) throw RangeError("catalog needs at least one qubit");
    SettingCatalog cat{n, Provenance::Traditional, {}};
    std::vector<int> all_qubits(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) all_qubits[q - 1] = q;
    const std::uint64_t count = pow_u64(3, n);
    cat.settings.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<GateKind> single(static_cast<std::size_t>(n), GateKind::Id);
        assign_base3(single, all_qubits, code);
        cat.settings.emplace_back(n, std::move(single));
    }
    return cat;
}

SettingCatalog catalog_new(const ConnectivityGraph &g) {
    if (g.n < 2 && !g.edges.empty()) {
        throw ContractError("two-qubit gates need at least two qubits");
    }
    SettingCatalog cat = catalog_traditional(g.n);
    cat.provenance = Provenance::New;
    for (const auto &[k, l] : g.edges) {
        std::vector<int> spectators;
        for (int q = 1; q <= g.n; ++q) {
            if (q != k && q != l) spectators.push_back(q);
        }
        const std::uint64_t count = pow_u64(3, g.n - 2);
        for (GateKind kind : {GateKind::YY, GateKind::XY}) {
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<GateKind> single(static_cast<std::size_t>(g.n), GateKind::Id);
                assign_base3(single, spectators, code);
                cat.settings.emplace_back(g.n, std::move(single), PairGate{kind, k, l});
            }
        }
    }
    return cat;
}

std::string catalog_hash(const SettingCatalog &c) {
    std::string text = std::to_string(c.n) + "|" + provenance_name(c.provenance);
    for (const MeasurementSetting &m : c.settings) {
        text += ";" + m.name();
    }
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SettingCatalog lemma2_scheme(int n) {
    if (n < 2) throw RangeError("the constructive scheme needs at least two qubits");
    SettingCatalog cat{n, Provenance::Lemma2, {}};
    cat.settings.push_back(MeasurementSetting::all_identity(n));

    // Single-excitation block.
    for (int q = 1; q <= n; ++q) {
        for (GateKind kind : {GateKind::RotX, GateKind::RotY}) {
            std::vector<GateKind> single(static_cast<std::size_t>(n), GateKind::Id);
            single[q - 1] = kind;
            cat.settings.emplace_back(n, std::move(single));
        }
    }

    // Subsets of excited qubits of size >= 2, in lexicographic order: the two
    // lowest members take the pair gate, the rest take RotX/RotY.
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (int size = 2; size <= n; ++size) {
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            if (std::popcount(mask) != size) continue;
            std::vector<int> members;
            for (int q = 1; q <= n; ++q) {
                if (mask & (std::uint64_t{1} << (n - q))) members.push_back(q);
            }
            const int pk = members[0];
            const int pl = members[1];
            const int rest = size - 2;
            for (GateKind kind : {GateKind::YY, GateKind::XY}) {
                for (std::uint64_t code = 0; code < (std::uint64_t{1} << rest); ++code) {
                    std::vector<GateKind> single(static_cast<std::size_t>(n), GateKind::Id);
                    for (int i = 0; i < rest; ++i) {
                        const bool use_y = (code >> (rest - 1 - i)) & 1;
                        single[members[2 + i] - 1] = use_y ? GateKind::RotY : GateKind::RotX;
                    }
                    cat.settings.emplace_back(n, std::move(single), PairGate{kind, pk, pl});
                }
            }
        }
    }
    return cat;
}

}  // namespace tomo
