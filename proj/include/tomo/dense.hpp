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

#ifndef TOMO_DENSE_HPP
#define TOMO_DENSE_HPP

#include <Eigen/Dense>
#include <complex>

#include "tomo/pauli.hpp"

namespace tomo {

using CMatrix = Eigen::MatrixXcd;

/// Dense 2^n x 2^n matrices above this cap are refused (memory guard).
inline constexpr int kDenseQubitCap = 8;

/// Kronecker product with the left operand on the most significant qubits.
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Dense matrix of a signed Pauli string; qubit 1 is the most significant
/// tensor factor.
CMatrix dense_pauli(const PauliString &p);

/// 2x2 unitary of a single-qubit gate kind.
CMatrix gate_unitary_1q(GateKind k);

/// 4x4 unitary of YY/XY on an ordered pair (first pair qubit = high bit).
CMatrix gate_unitary_2q(GateKind k);

/// exp(-i angle/2 sigma_axis).
CMatrix rotation_unitary(char axis, double angle);

/// Embed a 2x2 (resp. 4x4) unitary acting on `qubit` (resp. the ordered pair
/// k < l) into the full 2^n x 2^n space.
CMatrix embed_one(const CMatrix &u, int qubit, int n);
CMatrix embed_pair(const CMatrix &u, int k, int l, int n);

/// exp(-i H) for Hermitian H, via eigendecomposition.
CMatrix expm_minus_i(const CMatrix &hermitian);

/// Free evolution of the native XX+YY coupling on (k, l) for duration tau
/// with tau*g = tau_g. At tau_g = pi/8 this is the sqrt-iSWAP unitary.
CMatrix free_evolution_unitary(int k, int l, double tau_g, int n);

/// Full-setting readout unitary (product of the embedded gate unitaries).
CMatrix setting_unitary(const MeasurementSetting &m);

/// Unitary of one pulse step embedded into n qubits.
CMatrix pulse_unitary(const PulseStep &s, int n);

/// Composite unitary of a pulse sequence in application order.
CMatrix pulse_sequence_unitary(const std::vector<PulseStep> &steps, int n);

/// Equality up to a global phase, fixed by normalizing at the first entry of
/// `b` whose magnitude exceeds 1e-9.
bool approx_equal_up_to_phase(const CMatrix &a, const CMatrix &b, double tol);

}  // namespace tomo

#endif
