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

#ifndef TOMO_SCHEME_HPP
#define TOMO_SCHEME_HPP

#include <string>
#include <utility>
#include <vector>

#include "tomo/pauli.hpp"

namespace tomo {

/// Undirected qubit-connectivity graph: edges are the pairs that admit a
/// two-qubit readout gate. Stored with k < l, sorted, deduplicated.
struct ConnectivityGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const ConnectivityGraph &) const = default;
};

ConnectivityGraph make_graph(int n, std::vector<std::pair<int, int>> edges);
ConnectivityGraph graph_chain(int n);
ConnectivityGraph graph_grid(int rows, int cols);  // row-major qubit numbering
ConnectivityGraph graph_complete(int n);

enum class Provenance { Traditional, New, Custom, Lemma2 };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string &name);

/// Ordered, duplicate-free list of measurement settings. The ordering is the
/// canonical one documented per generator, so coverage-matrix rows and solver
/// outputs are reproducible.
struct SettingCatalog {
    int n = 0;
    Provenance provenance = Provenance::Custom;
    std::vector<MeasurementSetting> settings;

    bool operator==(const SettingCatalog &) const = default;
};

/// All 3^n per-qubit assignments of {Id, RotX, RotY}, in base-3 counting
/// order with qubit 1 as the most significant digit (digits Id, RotX, RotY).
SettingCatalog catalog_traditional(int n);

/// The traditional block followed, for each graph edge (k, l) in sorted order
/// and each gate kind in (YY, XY), by all 3^(n-2) spectator assignments.
/// Total size 3^n + 2 |edges| 3^(n-2).
SettingCatalog catalog_new(const ConnectivityGraph &g);

/// Constructive all-to-all scheme of size (3^n + 2n + 1)/2: the all-identity
/// setting, the 2n single-excitation settings, and for every qubit subset of
/// size >= 2 a YY/XY gate on its two lowest qubits with RotX/RotY on the rest.
SettingCatalog lemma2_scheme(int n);

/// FNV-1a hash of the canonical catalog text, as fixed-width hex. Plans embed
/// it so they can be validated against the catalog they were solved from.
std::string catalog_hash(const SettingCatalog &c);

}  // namespace tomo

#endif
