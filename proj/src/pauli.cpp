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

#include "tomo/pauli.hpp"

#include <array>
#include <numbers>

namespace tomo {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw RangeError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                         "], got " + std::to_string(n));
    }
}

// (x, z) symplectic encoding of a Pauli digit.
constexpr int pauli_x(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
constexpr int pauli_z(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

constexpr Pauli pauli_from_xz(int x, int z) {
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

// Phase exponent e in P_a P_b = i^e P_c (row = a, col = b, order I,X,Y,Z).
constexpr int kMulPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

struct SingleMul {
    Pauli p;
    int phase_exp;  // power of i
};

SingleMul mul_single(Pauli a, Pauli b) {
    const Pauli c = pauli_from_xz(pauli_x(a) ^ pauli_x(b), pauli_z(a) ^ pauli_z(b));
    return {c, kMulPhase[static_cast<int>(a)][static_cast<int>(b)]};
}

// Conjugation lookup for the single-qubit gate kinds, indexed [kind][pauli].
// Convention: RotX = exp(-i pi/4 x), RotY = exp(-i pi/4 y), RotZPos/Neg =
// exp(-/+ i pi/4 z), RotYPi/MinusPi = exp(-/+ i pi/2 y). The dense oracle
// regenerates this table in the test suite.
constexpr SignedPauli kSingleConj[7][4] = {
    // Id
    {{Pauli::I, +1}, {Pauli::X, +1}, {Pauli::Y, +1}, {Pauli::Z, +1}},
    // RotX: Y -> -Z, Z -> +Y
    {{Pauli::I, +1}, {Pauli::X, +1}, {Pauli::Z, -1}, {Pauli::Y, +1}},
    // RotY: X -> +Z, Z -> -X
    {{Pauli::I, +1}, {Pauli::Z, +1}, {Pauli::Y, +1}, {Pauli::X, -1}},
    // RotZPos: X -> -Y, Y -> +X
    {{Pauli::I, +1}, {Pauli::Y, -1}, {Pauli::X, +1}, {Pauli::Z, +1}},
    // RotZNeg: X -> +Y, Y -> -X
    {{Pauli::I, +1}, {Pauli::Y, +1}, {Pauli::X, -1}, {Pauli::Z, +1}},
    // RotYPi: X -> -X, Z -> -Z
    {{Pauli::I, +1}, {Pauli::X, -1}, {Pauli::Y, +1}, {Pauli::Z, -1}},
    // RotYMinusPi: same action as RotYPi
    {{Pauli::I, +1}, {Pauli::X, -1}, {Pauli::Y, +1}, {Pauli::Z, -1}},
};

}  // namespace

PauliString PauliString::identity(int n) {
    check_qubit_count(n);
    return PauliString{n, 0, 0, +1};
}

Pauli PauliString::factor(int qubit) const {
    if (qubit < 1 || qubit > n) {
        throw RangeError("qubit index " + std::to_string(qubit) + " out of range [1, " +
                         std::to_string(n) + "]");
    }
    const int x = (x_bits >> (qubit - 1)) & 1;
    const int z = (z_bits >> (qubit - 1)) & 1;
    return pauli_from_xz(x, z);
}

void PauliString::set_factor(int qubit, Pauli p) {
    if (qubit < 1 || qubit > n) {
        throw RangeError("qubit index " + std::to_string(qubit) + " out of range [1, " +
                         std::to_string(n) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (qubit - 1);
    x_bits = (x_bits & ~bit) | (pauli_x(p) ? bit : 0);
    z_bits = (z_bits & ~bit) | (pauli_z(p) ? bit : 0);
}

std::uint64_t pauli_index_count(int n) {
    check_qubit_count(n);
    return std::uint64_t{1} << (2 * n);
}

PauliString pauli_from_index(int n, std::uint64_t idx) {
    const std::uint64_t count = pauli_index_count(n);
    if (idx < 1 || idx > count) {
        throw RangeError("Pauli index " + std::to_string(idx) + " out of range [1, " +
                         std::to_string(count) + "]");
    }
    PauliString p = PauliString::identity(n);
    std::uint64_t rest = idx - 1;
    for (int qubit = n; qubit >= 1; --qubit) {
        p.set_factor(qubit, static_cast<Pauli>(rest & 3));
        rest >>= 2;
    }
    return p;
}

std::uint64_t pauli_to_index(const PauliString &p) {
    check_qubit_count(p.n);
    std::uint64_t idx = 0;
    for (int qubit = 1; qubit <= p.n; ++qubit) {
        idx = (idx << 2) | static_cast<std::uint64_t>(p.factor(qubit));
    }
    return idx + 1;
}

std::string pauli_label(const PauliString &p) {
    static constexpr char kLetters[] = "IXYZ";
    std::string label(static_cast<std::size_t>(p.n), 'I');
    for (int qubit = 1; qubit <= p.n; ++qubit) {
        label[qubit - 1] = kLetters[static_cast<int>(p.factor(qubit))];
    }
    return label;
}

std::string pauli_label(int n, std::uint64_t idx) { return pauli_label(pauli_from_index(n, idx)); }

bool is_pair_kind(GateKind k) { return k == GateKind::YY || k == GateKind::XY; }

std::string gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::Id: return "ID";
        case GateKind::RotX: return "RX";
        case GateKind::RotY: return "RY";
        case GateKind::RotZPos: return "RZ+";
        case GateKind::RotZNeg: return "RZ-";
        case GateKind::RotYPi: return "RY_PI";
        case GateKind::RotYMinusPi: return "RY_-PI";
        case GateKind::YY: return "YY";
        case GateKind::XY: return "XY";
    }
    throw ContractError("unknown gate kind");
}

GateKind gate_kind_from_name(const std::string &name) {
    if (name == "ID") return GateKind::Id;
    if (name == "RX") return GateKind::RotX;
    if (name == "RY") return GateKind::RotY;
    if (name == "RZ+") return GateKind::RotZPos;
    if (name == "RZ-") return GateKind::RotZNeg;
    if (name == "RY_PI") return GateKind::RotYPi;
    if (name == "RY_-PI") return GateKind::RotYMinusPi;
    if (name == "YY") return GateKind::YY;
    if (name == "XY") return GateKind::XY;
    throw ParseError("unknown gate kind \"" + name + "\"");
}

SignedPauli conjugate_single(GateKind g, Pauli p) {
    if (is_pair_kind(g)) {
        throw ContractError("conjugate_single called with a two-qubit gate kind");
    }
    return kSingleConj[static_cast<int>(g)][static_cast<int>(p)];
}

SignedPauliPair conjugate_pair(GateKind g, Pauli pk, Pauli pl) {
    if (!is_pair_kind(g)) {
        throw ContractError("conjugate_pair called with a single-qubit gate kind");
    }
    const Pauli ak = (g == GateKind::YY) ? Pauli::Y : Pauli::X;
    const Pauli al = Pauli::Y;

    const bool anti_k = pk != Pauli::I && pk != ak;
    const bool anti_l = pl != Pauli::I && pl != al;
    if (anti_k == anti_l) {
        // Commutes with the gate generator: unchanged.
        return {pk, pl, +1};
    }

    // Anticommutes: M^dagger P M = i (A P) with A the generator product.
    const SingleMul mk = mul_single(ak, pk);
    const SingleMul ml = mul_single(al, pl);
    const int phase_exp = (1 + mk.phase_exp + ml.phase_exp) % 4;
    if (phase_exp != 0 && phase_exp != 2) {
        throw ContractError("conjugation produced an imaginary phase");
    }
    return {mk.p, ml.p, phase_exp == 0 ? +1 : -1};
}

MeasurementSetting::MeasurementSetting(int n, std::vector<GateKind> single,
                                       std::optional<PairGate> pair)
    : n_(n), single_(std::move(single)), pair_(pair) {
    check_qubit_count(n);
    if (static_cast<int>(single_.size()) != n) {
        throw ContractError("setting needs one single-qubit kind per qubit");
    }
    for (GateKind k : single_) {
        if (k != GateKind::Id && k != GateKind::RotX && k != GateKind::RotY) {
            throw ContractError("per-qubit readout gates are limited to {Id, RotX, RotY}");
        }
    }
    if (pair_) {
        if (!is_pair_kind(pair_->kind)) {
            throw ContractError("pair gate kind must be YY or XY");
        }
        if (pair_->k < 1 || pair_->l > n || pair_->k >= pair_->l) {
            throw ContractError("pair gate qubits must satisfy 1 <= k < l <= n");
        }
        if (single_[pair_->k - 1] != GateKind::Id || single_[pair_->l - 1] != GateKind::Id) {
            throw ContractError("qubits under a two-qubit gate cannot carry another gate");
        }
    }
}

MeasurementSetting MeasurementSetting::all_identity(int n) {
    return MeasurementSetting(n, std::vector<GateKind>(static_cast<std::size_t>(n), GateKind::Id));
}

GateKind MeasurementSetting::single(int qubit) const {
    if (qubit < 1 || qubit > n_) {
        throw RangeError("qubit index out of range");
    }
    return single_[qubit - 1];
}

std::vector<ReadoutGate> MeasurementSetting::gates() const {
    std::vector<ReadoutGate> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int qubit = 1; qubit <= n_; ++qubit) {
        if (pair_ && qubit == pair_->k) {
            out.push_back({pair_->kind, pair_->k, pair_->l});
            continue;
        }
        if (pair_ && qubit == pair_->l) continue;
        out.push_back({single_[qubit - 1], qubit, 0});
    }
    return out;
}

std::string MeasurementSetting::name() const {
    std::string out;
    for (const ReadoutGate &g : gates()) {
        if (g.kind == GateKind::Id) continue;
        if (!out.empty()) out += '.';
        if (is_pair_kind(g.kind)) {
            out += gate_kind_name(g.kind) + std::to_string(g.q1) + "-" + std::to_string(g.q2);
        } else {
            out += (g.kind == GateKind::RotX ? "Rx" : "Ry") + std::to_string(g.q1);
        }
    }
    return out.empty() ? "I" : out;
}

PauliString conjugate_setting(const MeasurementSetting &m, const PauliString &p) {
    if (m.n() != p.n) {
        throw ContractError("setting acts on " + std::to_string(m.n()) +
                            " qubits but operator has " + std::to_string(p.n));
    }
    PauliString out = PauliString::identity(p.n);
    int sign = p.sign;
    for (int qubit = 1; qubit <= p.n; ++qubit) {
        if (m.pair() && (qubit == m.pair()->k || qubit == m.pair()->l)) continue;
        const SignedPauli r = conjugate_single(m.single(qubit), p.factor(qubit));
        out.set_factor(qubit, r.p);
        sign *= r.sign;
    }
    if (m.pair()) {
        const SignedPauliPair r =
            conjugate_pair(m.pair()->kind, p.factor(m.pair()->k), p.factor(m.pair()->l));
        out.set_factor(m.pair()->k, r.pk);
        out.set_factor(m.pair()->l, r.pl);
        sign *= r.sign;
    }
    if (sign != +1 && sign != -1) {
        throw ContractError("conjugation sign left {+1, -1}");
    }
    out.sign = sign;
    return out;
}

std::vector<PulseStep> compile_two_qubit(const ReadoutGate &g) {
    if (!is_pair_kind(g.kind)) {
        throw ContractError("compile_two_qubit expects a YY or XY gate");
    }
    constexpr double pi = std::numbers::pi;
    const double tau_g = pi / 8;

    auto rotation = [&](char axis, double angle) {
        PulseStep s;
        s.kind = PulseStep::Kind::SingleQubitRotation;
        s.axis = axis;
        s.angle = angle;
        s.qubit = g.q1;
        return s;
    };
    auto free_evolution = [&]() {
        PulseStep s;
        s.kind = PulseStep::Kind::FreeEvolution;
        s.k = g.q1;
        s.l = g.q2;
        s.tau_g = tau_g;
        return s;
    };

    std::vector<PulseStep> steps = {
        rotation('y', -pi),
        free_evolution(),
        rotation('y', pi),
        free_evolution(),
    };
    if (g.kind == GateKind::XY) {
        steps.insert(steps.begin(), rotation('z', pi / 2));
        steps.push_back(rotation('z', -pi / 2));
    }
    return steps;
}

}  // namespace tomo
