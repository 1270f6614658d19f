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

#include "tomo/dense.hpp"

#include <cmath>
#include <numbers>

namespace tomo {

namespace {

using namespace std::complex_literals;

constexpr double kPi = std::numbers::pi;

void check_dense_cap(int n) {
    if (n < 1) throw RangeError("qubit count must be positive");
    if (n > kDenseQubitCap) {
        throw CapacityError("dense operations are capped at " + std::to_string(kDenseQubitCap) +
                            " qubits, got " + std::to_string(n));
    }
}

CMatrix pauli_1q(Pauli p) {
    CMatrix m(2, 2);
    switch (p) {
        case Pauli::I: m << 1, 0, 0, 1; break;
        case Pauli::X: m << 0, 1, 1, 0; break;
        case Pauli::Y: m << 0, -1i, 1i, 0; break;
        case Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

}  // namespace

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix dense_pauli(const PauliString &p) {
    check_dense_cap(p.n);
    CMatrix m = pauli_1q(p.factor(1));
    for (int qubit = 2; qubit <= p.n; ++qubit) {
        m = kron(m, pauli_1q(p.factor(qubit)));
    }
    return static_cast<double>(p.sign) * m;
}

CMatrix gate_unitary_1q(GateKind k) {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix m(2, 2);
    switch (k) {
        case GateKind::Id:
            m << 1, 0, 0, 1;
            return m;
        case GateKind::RotX:
            m << s, -1i * s, -1i * s, s;
            return m;
        case GateKind::RotY:
            m << s, -s, s, s;
            return m;
        case GateKind::RotZPos:
            m << std::exp(-1i * kPi / 4.0), 0, 0, std::exp(1i * kPi / 4.0);
            return m;
        case GateKind::RotZNeg:
            m << std::exp(1i * kPi / 4.0), 0, 0, std::exp(-1i * kPi / 4.0);
            return m;
        case GateKind::RotYPi:
            m << 0, -1, 1, 0;
            return m;
        case GateKind::RotYMinusPi:
            m << 0, 1, -1, 0;
            return m;
        default:
            throw ContractError("gate_unitary_1q expects a single-qubit kind");
    }
}

CMatrix gate_unitary_2q(GateKind k) {
    if (!is_pair_kind(k)) {
        throw ContractError("gate_unitary_2q expects YY or XY");
    }
    // exp(-i pi/4 A) = (I - i A)/sqrt(2) since A^2 = I.
    const Pauli a_first = (k == GateKind::YY) ? Pauli::Y : Pauli::X;
    const CMatrix a = kron(pauli_1q(a_first), pauli_1q(Pauli::Y));
    return (CMatrix::Identity(4, 4) - 1i * a) / std::sqrt(2.0);
}

CMatrix rotation_unitary(char axis, double angle) {
    Pauli p;
    switch (axis) {
        case 'x': p = Pauli::X; break;
        case 'y': p = Pauli::Y; break;
        case 'z': p = Pauli::Z; break;
        default: throw ContractError("rotation axis must be one of x, y, z");
    }
    return std::cos(angle / 2) * CMatrix::Identity(2, 2) -
           1i * std::sin(angle / 2) * pauli_1q(p);
}

CMatrix embed_one(const CMatrix &u, int qubit, int n) {
    check_dense_cap(n);
    if (qubit < 1 || qubit > n) throw RangeError("embed qubit out of range");
    const Eigen::Index dim = Eigen::Index{1} << n;
    const int shift = n - qubit;  // qubit 1 owns the most significant bit
    CMatrix out = CMatrix::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const Eigen::Index rest = r & ~(Eigen::Index{1} << shift);
        const int rb = (r >> shift) & 1;
        for (int cb = 0; cb < 2; ++cb) {
            out(r, rest | (Eigen::Index{cb} << shift)) = u(rb, cb);
        }
    }
    return out;
}

CMatrix embed_pair(const CMatrix &u, int k, int l, int n) {
    check_dense_cap(n);
    if (k < 1 || l > n || k >= l) throw RangeError("embed pair must satisfy 1 <= k < l <= n");
    const Eigen::Index dim = Eigen::Index{1} << n;
    const int shift_k = n - k;
    const int shift_l = n - l;
    const Eigen::Index mask =
        ~((Eigen::Index{1} << shift_k) | (Eigen::Index{1} << shift_l));
    CMatrix out = CMatrix::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const Eigen::Index rest = r & mask;
        const int rloc = (((r >> shift_k) & 1) << 1) | ((r >> shift_l) & 1);
        for (int cloc = 0; cloc < 4; ++cloc) {
            const Eigen::Index c = rest | (Eigen::Index{(cloc >> 1) & 1} << shift_k) |
                                   (Eigen::Index{cloc & 1} << shift_l);
            out(r, c) = u(rloc, cloc);
        }
    }
    return out;
}

CMatrix expm_minus_i(const CMatrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw Error("eigendecomposition failed in expm_minus_i");
    }
    const auto &vals = solver.eigenvalues();
    Eigen::VectorXcd phases(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        phases(i) = std::exp(-1i * vals(i));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

CMatrix free_evolution_unitary(int k, int l, double tau_g, int n) {
    check_dense_cap(n);
    PauliString xx = PauliString::identity(n);
    xx.set_factor(k, Pauli::X);
    xx.set_factor(l, Pauli::X);
    PauliString yy = PauliString::identity(n);
    yy.set_factor(k, Pauli::Y);
    yy.set_factor(l, Pauli::Y);
    return expm_minus_i(tau_g * (dense_pauli(xx) + dense_pauli(yy)));
}

CMatrix setting_unitary(const MeasurementSetting &m) {
    check_dense_cap(m.n());
    const Eigen::Index dim = Eigen::Index{1} << m.n();
    CMatrix u = CMatrix::Identity(dim, dim);
    for (const ReadoutGate &g : m.gates()) {
        if (g.kind == GateKind::Id) continue;
        if (is_pair_kind(g.kind)) {
            u = embed_pair(gate_unitary_2q(g.kind), g.q1, g.q2, m.n()) * u;
        } else {
            u = embed_one(gate_unitary_1q(g.kind), g.q1, m.n()) * u;
        }
    }
    return u;
}

CMatrix pulse_unitary(const PulseStep &s, int n) {
    if (s.kind == PulseStep::Kind::FreeEvolution) {
        return free_evolution_unitary(s.k, s.l, s.tau_g, n);
    }
    return embed_one(rotation_unitary(s.axis, s.angle), s.qubit, n);
}

CMatrix pulse_sequence_unitary(const std::vector<PulseStep> &steps, int n) {
    check_dense_cap(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix u = CMatrix::Identity(dim, dim);
    for (const PulseStep &s : steps) {
        u = pulse_unitary(s, n) * u;  // application order: later steps multiply on the left
    }
    return u;
}

bool approx_equal_up_to_phase(const CMatrix &a, const CMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    std::complex<double> phase = 1.0;
    bool found = false;
    for (Eigen::Index j = 0; j < b.cols() && !found; ++j) {
        for (Eigen::Index i = 0; i < b.rows() && !found; ++i) {
            if (std::abs(b(i, j)) > 1e-9) {
                phase = a(i, j) / b(i, j);
                found = true;
            }
        }
    }
    if (!found) return a.norm() <= tol;
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace tomo
