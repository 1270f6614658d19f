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

#ifndef TOMO_SERIALIZE_HPP
#define TOMO_SERIALIZE_HPP

#include <string>

#include "tomo/sim.hpp"

namespace tomo {

/// Catalog files: JSON with n, provenance and one record per setting listing
/// its non-identity gates as {"kind": "RX", "qubits": [1]}.
std::string save_catalog(const SettingCatalog &c);
SettingCatalog load_catalog(const std::string &text);

/// Plan files: JSON with the selected rows, their settings, the signed
/// coefficient map and the source-catalog hash.
std::string save_plan(const TomographyPlan &plan);
TomographyPlan load_plan(const std::string &text);

/// Graph files: "n <count>" header plus one "k l" edge per line.
std::string save_graph(const ConnectivityGraph &g);
ConnectivityGraph load_graph(const std::string &text);

/// Record files: JSON list of per-setting expectation vectors.
std::string save_records(int n, const std::vector<MeasurementRecord> &records);
std::vector<MeasurementRecord> load_records(const std::string &text, int *n_out = nullptr);

/// State files: "n <count>" header, then 2^n rows of "re im" pairs.
std::string save_state(const DensityMatrix &dm);
DensityMatrix load_state(const std::string &text);

std::string robustness_csv(const std::vector<RobustnessPoint> &rows);

std::string read_file(const std::string &path);
/// Write-to-temporary-then-rename, so readers never observe partial files.
void write_file_atomic(const std::string &path, const std::string &content);

}  // namespace tomo

#endif
