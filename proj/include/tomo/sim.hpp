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

#ifndef TOMO_SIM_HPP
#define TOMO_SIM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tomo/coverage.hpp"
#include "tomo/dense.hpp"

namespace tomo {

struct DensityMatrix {
    int n = 0;
    CMatrix rho;
};

/// Hermiticity/trace check with the documented tolerances (1e-10). The PSD
/// check is slack (-1e-8 on the minimum eigenvalue) and linear-inversion
/// reconstructions under noise are allowed to fail it, so it is separate.
bool is_hermitian_unit_trace(const DensityMatrix &dm, double tol = 1e-10);
double min_eigenvalue(const DensityMatrix &dm);

/// Control-error model: relative amplitude error eta on single-qubit rotation
/// angles, and residual coupling of strength zeta (relative to the pairwise
/// couplings g, in MHz) on non-target coupled pairs during free evolutions.
struct NoiseModel {
    double eta = 0.0;
    double zeta = 0.0;
    ConnectivityGraph graph;    // which pairs couple
    double g_default = 30.0;    // MHz
    std::map<std::pair<int, int>, double> g_override;
    std::uint64_t rng_seed = 0;

    double coupling(int k, int l) const;
    static NoiseModel noiseless(int n);
};

/// Deterministic random stream: std::mt19937_64 with hand-rolled uniform,
/// sign and normal draws so output is identical across platforms.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    double uniform();                 // [0, 1)
    double uniform(double hi);        // [0, hi)
    int coin_sign();                  // +1 or -1, fair
    double normal();                  // standard normal (Box-Muller)

    /// Stream seed derived from (seed, a, b) by splitmix64 mixing.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Expectations of the 2^n readout operators O_j in {I,Z}^n (canonical order)
/// after one measurement setting.
struct MeasurementRecord {
    int setting_index = 0;  // 1-based catalog row
    std::vector<double> expectations;
    std::optional<long> shots;
};

/// |psi><psi| for a Haar-random |psi| (normalized complex Gaussian vector).
DensityMatrix random_pure_state(int n, std::uint64_t seed);

/// Readout unitary with control errors drawn from `rng`: every single-qubit
/// rotation angle theta becomes theta(1 + s u), u ~ U[0, eta], s a fair sign;
/// two-qubit gates run through their pulse decomposition, with each free
/// evolution picking up g_ab u[zeta] (XX+YY) on every non-target coupled
/// pair. With eta = zeta = 0 this equals setting_unitary(m) to 1e-12.
CMatrix noisy_setting_unitary(const MeasurementSetting &m, const NoiseModel &noise,
                              RngStream &rng);

/// Applies the (noisy) readout unitary, reads the computational-basis
/// distribution (exactly, or as a multinomial empirical distribution when
/// `shots` is set) and returns all 2^n readout expectations.
MeasurementRecord measure_setting(const DensityMatrix &rho, const MeasurementSetting &m,
                                  const NoiseModel &noise, RngStream &rng,
                                  std::optional<long> shots = std::nullopt,
                                  int setting_index = 0);

struct Reconstruction {
    DensityMatrix rho;
    std::vector<double> mu;  // mu[i-1] for Pauli index i
};

/// Linear-inversion reconstruction: each record entry contributes
/// sign * <O_j> / 2^n to its mapped coefficient, duplicate estimates are
/// averaged, and mu_1 is pinned to 1/2^n.
Reconstruction reconstruct(const TomographyPlan &plan,
                           const std::vector<MeasurementRecord> &records);

/// 1 - tr(rho0 rho_e) / sqrt(tr(rho0^2) tr(rho_e^2)), in [0, 2].
double infidelity(const DensityMatrix &rho0, const DensityMatrix &rho_e);

struct RobustnessPoint {
    std::string scheme;
    double eta = 0.0;
    double zeta = 0.0;
    double mean_infidelity = 0.0;
    double std_error = 0.0;
    int num_states = 0;
    std::uint64_t seed = 0;
};

/// Monte-Carlo robustness study over an (eta, zeta) grid for two schemes.
/// Each state's pipeline owns a private stream derived from (seed, state,
/// scheme) and is re-seeded identically at every grid point, so runs are
/// reproducible and grid points are coupled. Parallelism over states is
/// capped by the TOMOPLAN_THREADS environment variable.
std::vector<RobustnessPoint> robustness_experiment(
    int n, const TomographyPlan &plan_new, const TomographyPlan &plan_traditional,
    const ConnectivityGraph &graph, const std::vector<double> &eta_grid,
    const std::vector<double> &zeta_grid, int num_states, std::uint64_t seed,
    std::optional<long> shots = std::nullopt);

}  // namespace tomo

#endif
