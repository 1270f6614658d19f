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

// Reference values from the literature on minimal measurement schemes for
// XX+YY-coupled systems with Z readout. Tests assert against these.

#ifndef TOMO_TESTS_PUBLISHED_HPP
#define TOMO_TESTS_PUBLISHED_HPP

namespace published {

// Signed coverage matrix of the 2-qubit complete-graph catalog (11 settings
// x 16 Pauli operators), in canonical row/column order.
inline constexpr int kCoverage2qComplete[11][16] = {
    // II
    {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1},
    // Rx2
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},
    // Ry2
    {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0},
    // Rx1
    {1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0},
    // Rx1.Rx2
    {1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0},
    // Rx1.Ry2
    {1, -1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0},
    // Ry1
    {1, 0, 0, 1, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    // Ry1.Rx2
    {1, 0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    // Ry1.Ry2
    {1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    // YY1-2
    {1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 1},
    // XY1-2
    {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
};

// Minimum numbers of measurement settings by qubit count and connectivity.
// The n = 5 entries are the best published values; exactness is not claimed
// there by the source.
inline constexpr int kTraditional[] = {0, 3, 9, 27, 81, 243};
inline constexpr int kOptimalAllToAll[] = {0, 0, 6, 15, 35, 89};
inline constexpr int kOptimalChain[] = {0, 0, 6, 16, 39, 108};
inline constexpr int kOptimal2x2Grid = 38;

}  // namespace published

#endif
