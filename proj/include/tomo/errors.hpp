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

#ifndef TOMO_ERRORS_HPP
#define TOMO_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tomo {

/// Base class of every error thrown by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument outside its documented domain (index, count, budget, ...).
struct RangeError : Error {
    using Error::Error;
};

/// A call violating an interface contract (mismatched dimensions, wrong gate
/// kind, double-assigned qubit, ...).
struct ContractError : Error {
    using Error::Error;
};

/// Dense-matrix operations are capped in qubit count.
struct CapacityError : Error {
    using Error::Error;
};

/// A covering instance with at least one column no row can cover.
struct InfeasibleError : Error {
    InfeasibleError(const std::string &msg, std::vector<std::string> uncovered_labels)
        : Error(msg), uncovered(std::move(uncovered_labels)) {}
    std::vector<std::string> uncovered;
};

/// Malformed input text. Line/column are 1-based; 0 means "not localized".
struct ParseError : Error {
    ParseError(const std::string &msg, int line_no = 0, int column_no = 0)
        : Error(msg), line(line_no), column(column_no) {}
    int line;
    int column;
};

/// Measurement records that do not determine every coefficient.
struct ReconstructionError : Error {
    ReconstructionError(const std::string &msg, std::vector<std::uint64_t> missing_indices)
        : Error(msg), missing(std::move(missing_indices)) {}
    std::vector<std::uint64_t> missing;
};

/// Zero-purity input to the infidelity metric.
struct SingularityError : Error {
    using Error::Error;
};

}  // namespace tomo

#endif
