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

#ifndef TOMO_PAULI_HPP
#define TOMO_PAULI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tomo/errors.hpp"

namespace tomo {

/// Single-qubit Pauli factor. The enum values are the base-4 digits used for
/// operator indexing, so the order (I, X, Y, Z) is load-bearing.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct SignedPauli {
    Pauli p;
    int sign;  // +1 or -1
};

/// Signed n-qubit Pauli product in symplectic form. Qubits are numbered 1..n;
/// bit k-1 of x_bits/z_bits belongs to qubit k. Factor decoding per qubit:
/// (x=0,z=0) I, (1,0) X, (1,1) Y, (0,1) Z. Conjugation by every gate in this
/// toolkit maps Pauli strings to +/-Pauli strings, so the phase is a bare sign.
struct PauliString {
    int n = 0;
    std::uint64_t x_bits = 0;
    std::uint64_t z_bits = 0;
    int sign = +1;

    static PauliString identity(int n);

    Pauli factor(int qubit) const;
    void set_factor(int qubit, Pauli p);

    bool operator==(const PauliString &) const = default;
};

/// Hard cap so that 4^n fits a 64-bit index. Planning at this size is purely
/// symbolic; the dense oracle has a much smaller cap of its own.
inline constexpr int kMaxQubits = 31;

std::uint64_t pauli_index_count(int n);  // 4^n

/// 1-based index <-> Pauli string, base-4 digits (I, X, Y, Z) with qubit 1 as
/// the most significant digit. The returned sign is always +1.
PauliString pauli_from_index(int n, std::uint64_t idx);
std::uint64_t pauli_to_index(const PauliString &p);

/// Unsigned label such as "IXZ" (qubit 1 leftmost).
std::string pauli_label(const PauliString &p);
std::string pauli_label(int n, std::uint64_t idx);

/// Readout gate kinds. RotX/RotY are the pi/2 rotations exp(-i pi/4 sigma);
/// RotZPos/RotZNeg and RotYPi/RotYMinusPi appear in pulse decompositions of
/// the two-qubit gates. YY = exp(-i pi/4 y(x)y), XY = exp(-i pi/4 x(x)y).
enum class GateKind : std::uint8_t {
    Id = 0,
    RotX,
    RotY,
    RotZPos,
    RotZNeg,
    RotYPi,
    RotYMinusPi,
    YY,
    XY,
};

bool is_pair_kind(GateKind k);
std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string &name);

/// A readout gate bound to one qubit (q2 == 0) or an ordered pair q1 < q2.
struct ReadoutGate {
    GateKind kind = GateKind::Id;
    int q1 = 0;
    int q2 = 0;

    bool operator==(const ReadoutGate &) const = default;
};

/// M^dagger p M for a single-qubit gate kind and a single-qubit factor.
SignedPauli conjugate_single(GateKind g, Pauli p);

struct SignedPauliPair {
    Pauli pk;
    Pauli pl;
    int sign;
};

/// M^dagger p M for YY/XY acting on the factor (pk on the first pair qubit,
/// pl on the second).
SignedPauliPair conjugate_pair(GateKind g, Pauli pk, Pauli pl);

struct PairGate {
    GateKind kind = GateKind::YY;  // YY or XY
    int k = 0;                     // k < l
    int l = 0;

    bool operator==(const PairGate &) const = default;
};

/// One readout assignment: a gate from {Id, RotX, RotY} per qubit plus at most
/// one two-qubit gate on an ordered pair. Qubits under the pair gate carry no
/// separate single-qubit gate.
class MeasurementSetting {
  public:
    MeasurementSetting(int n, std::vector<GateKind> single,
                       std::optional<PairGate> pair = std::nullopt);

    static MeasurementSetting all_identity(int n);

    int n() const { return n_; }
    GateKind single(int qubit) const;
    const std::optional<PairGate> &pair() const { return pair_; }

    /// Materialized gate list, one entry per qubit block, ascending by the
    /// lowest qubit the gate touches. Id gates are included.
    std::vector<ReadoutGate> gates() const;

    /// Compact display name, e.g. "Rx1.Ry2", "YY1-2.Rx3"; "I" when all-identity.
    std::string name() const;

    bool operator==(const MeasurementSetting &) const = default;

  private:
    int n_;
    std::vector<GateKind> single_;  // size n; entries at pair positions are Id
    std::optional<PairGate> pair_;
};

/// Factor-wise conjugation of p by the whole setting; the result sign is the
/// product of the factor signs and p.sign.
PauliString conjugate_setting(const MeasurementSetting &m, const PauliString &p);

/// Pulse-level realization of the two-qubit gates: single-qubit rotation
/// pulses around free evolutions of the native coupling, tau*g = pi/8 each.
struct PulseStep {
    enum class Kind { FreeEvolution, SingleQubitRotation };

    Kind kind = Kind::SingleQubitRotation;
    // SingleQubitRotation: exp(-i angle/2 sigma_axis) on `qubit`.
    char axis = 0;  // 'x', 'y' or 'z'
    double angle = 0.0;
    int qubit = 0;
    // FreeEvolution: exp(-i tau_g (XkXl + YkYl)) on the pair (k, l).
    int k = 0;
    int l = 0;
    double tau_g = 0.0;
};

/// Decomposition of a YY/XY gate in application order (first step acts first).
std::vector<PulseStep> compile_two_qubit(const ReadoutGate &g);

}  // namespace tomo

#endif
