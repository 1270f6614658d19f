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

#include "tomo/sim.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace tomo {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sim_cap(int n) {
    if (n < 1) throw RangeError("qubit count must be positive");
    if (n > kDenseQubitCap) {
        throw CapacityError("simulation is capped at " + std::to_string(kDenseQubitCap) +
                            " qubits");
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char *env = std::getenv("TOMOPLAN_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < static_cast<long>(hw)) hw = static_cast<unsigned>(v);
    }
    return static_cast<int>(hw);
}

}  // namespace

bool is_hermitian_unit_trace(const DensityMatrix &dm, double tol) {
    if (dm.rho.rows() != dm.rho.cols()) return false;
    if ((dm.rho - dm.rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(dm.rho.trace() - std::complex<double>(1.0)) <= tol;
}

double min_eigenvalue(const DensityMatrix &dm) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(dm.rho);
    return solver.eigenvalues().minCoeff();
}

double NoiseModel::coupling(int k, int l) const {
    if (k > l) std::swap(k, l);
    const auto it = g_override.find({k, l});
    return it != g_override.end() ? it->second : g_default;
}

NoiseModel NoiseModel::noiseless(int n) {
    NoiseModel m;
    m.graph = ConnectivityGraph{n, {}};
    return m;
}

double RngStream::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double hi) { return uniform() * hi; }

int RngStream::coin_sign() { return (gen_() & 1) ? +1 : -1; }

double RngStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return radius * std::cos(2.0 * kPi * u2);
}

std::uint64_t RngStream::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(seed ^ splitmix64(a)) ^ splitmix64(b ^ 0x517cc1b727220a95ULL));
}

DensityMatrix random_pure_state(int n, std::uint64_t seed) {
    check_sim_cap(n);
    RngStream rng(seed);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        psi(i) = std::complex<double>(rng.normal(), rng.normal());
    }
    psi.normalize();
    return DensityMatrix{n, psi * psi.adjoint()};
}

namespace {

// Noisy angle theta(1 + s u), u ~ U[0, eta]; u drawn first, then the sign.
double noisy_angle(double theta, const NoiseModel &noise, RngStream &rng) {
    const double u = rng.uniform(noise.eta);
    const int s = rng.coin_sign();
    return theta * (1.0 + s * u);
}

CMatrix noisy_rotation(char axis, double theta, int qubit, int n, const NoiseModel &noise,
                       RngStream &rng) {
    return embed_one(rotation_unitary(axis, noisy_angle(theta, noise, rng)), qubit, n);
}

// Free evolution of the target pair plus residual-coupling terms, one
// u[zeta] draw per coupled non-target pair per segment (edge order).
CMatrix noisy_free_evolution(const PulseStep &step, int n, const NoiseModel &noise,
                             RngStream &rng) {
    PauliString xx = PauliString::identity(n);
    xx.set_factor(step.k, Pauli::X);
    xx.set_factor(step.l, Pauli::X);
    PauliString yy = PauliString::identity(n);
    yy.set_factor(step.k, Pauli::Y);
    yy.set_factor(step.l, Pauli::Y);
    CMatrix h = step.tau_g * (dense_pauli(xx) + dense_pauli(yy));

    const double g_target = noise.coupling(step.k, step.l);
    for (const auto &[a, b] : noise.graph.edges) {
        if (a == step.k && b == step.l) continue;
        const double u = rng.uniform(noise.zeta);
        if (u == 0.0) continue;
        PauliString rxx = PauliString::identity(n);
        rxx.set_factor(a, Pauli::X);
        rxx.set_factor(b, Pauli::X);
        PauliString ryy = PauliString::identity(n);
        ryy.set_factor(a, Pauli::Y);
        ryy.set_factor(b, Pauli::Y);
        const double strength = step.tau_g * (noise.coupling(a, b) / g_target) * u;
        h += strength * (dense_pauli(rxx) + dense_pauli(ryy));
    }
    return expm_minus_i(h);
}

}  // namespace

CMatrix noisy_setting_unitary(const MeasurementSetting &m, const NoiseModel &noise,
                              RngStream &rng) {
    check_sim_cap(m.n());
    const Eigen::Index dim = Eigen::Index{1} << m.n();
    CMatrix u = CMatrix::Identity(dim, dim);

    // Single-qubit readout rotations first (ascending qubit), then the
    // two-qubit pulse sequence.
    for (int qubit = 1; qubit <= m.n(); ++qubit) {
        if (m.pair() && (qubit == m.pair()->k || qubit == m.pair()->l)) continue;
        const GateKind kind = m.single(qubit);
        if (kind == GateKind::Id) continue;
        const char axis = (kind == GateKind::RotX) ? 'x' : 'y';
        u = noisy_rotation(axis, kPi / 2, qubit, m.n(), noise, rng) * u;
    }
    if (m.pair()) {
        const ReadoutGate gate{m.pair()->kind, m.pair()->k, m.pair()->l};
        for (const PulseStep &step : compile_two_qubit(gate)) {
            if (step.kind == PulseStep::Kind::FreeEvolution) {
                u = noisy_free_evolution(step, m.n(), noise, rng) * u;
            } else {
                u = noisy_rotation(step.axis, step.angle, step.qubit, m.n(), noise, rng) * u;
            }
        }
    }
    return u;
}

MeasurementRecord measure_setting(const DensityMatrix &rho, const MeasurementSetting &m,
                                  const NoiseModel &noise, RngStream &rng,
                                  std::optional<long> shots, int setting_index) {
    if (rho.n != m.n()) {
        throw ContractError("state and setting qubit counts differ");
    }
    if (shots && *shots <= 0) {
        throw RangeError("shot count must be positive");
    }
    check_sim_cap(rho.n);

    const CMatrix u = noisy_setting_unitary(m, noise, rng);
    const CMatrix rotated = u * rho.rho * u.adjoint();
    const std::uint64_t dim = std::uint64_t{1} << rho.n;

    std::vector<double> probs(dim);
    for (std::uint64_t l = 0; l < dim; ++l) {
        probs[l] = std::max(0.0, rotated(static_cast<Eigen::Index>(l),
                                         static_cast<Eigen::Index>(l))
                                     .real());
    }

    if (shots) {
        // Multinomial empirical distribution via inverse-CDF sampling.
        std::vector<double> cdf(dim);
        double acc = 0.0;
        for (std::uint64_t l = 0; l < dim; ++l) {
            acc += probs[l];
            cdf[l] = acc;
        }
        std::vector<long> counts(dim, 0);
        for (long s = 0; s < *shots; ++s) {
            const double x = rng.uniform() * acc;
            const auto it = std::lower_bound(cdf.begin(), cdf.end(), x);
            ++counts[static_cast<std::uint64_t>(it - cdf.begin())];
        }
        for (std::uint64_t l = 0; l < dim; ++l) {
            probs[l] = static_cast<double>(counts[l]) / static_cast<double>(*shots);
        }
    }

    MeasurementRecord record;
    record.setting_index = setting_index;
    record.shots = shots;
    record.expectations.resize(dim);
    // <O_j> = sum_l (-1)^{popcount(l & zmask)} P(l); zmask = j-1 in the
    // qubit-1-most-significant bit layout shared with the basis index.
    for (std::uint64_t j = 1; j <= dim; ++j) {
        const std::uint64_t zmask = j - 1;
        double e = 0.0;
        for (std::uint64_t l = 0; l < dim; ++l) {
            e += (std::popcount(l & zmask) & 1) ? -probs[l] : probs[l];
        }
        record.expectations[j - 1] = e;
    }
    return record;
}

Reconstruction reconstruct(const TomographyPlan &plan,
                           const std::vector<MeasurementRecord> &records) {
    const std::uint64_t cols = pauli_index_count(plan.n);
    const std::uint64_t readouts = std::uint64_t{1} << plan.n;
    const double norm = 1.0 / static_cast<double>(readouts);

    std::vector<double> sums(cols, 0.0);
    std::vector<int> counts(cols, 0);

    std::vector<const MeasurementRecord *> by_setting(plan.selected.size(), nullptr);
    for (const MeasurementRecord &r : records) {
        for (std::size_t s = 0; s < plan.selected.size(); ++s) {
            if (plan.selected[s] == r.setting_index) by_setting[s] = &r;
        }
    }
    std::vector<std::uint64_t> missing_settings;
    for (std::size_t s = 0; s < plan.selected.size(); ++s) {
        if (!by_setting[s]) missing_settings.push_back(plan.selected[s]);
    }
    if (!missing_settings.empty()) {
        throw ReconstructionError(
            "records missing for " + std::to_string(missing_settings.size()) +
                " plan settings (first: index " + std::to_string(missing_settings.front()) + ")",
            std::move(missing_settings));
    }

    for (std::size_t s = 0; s < plan.selected.size(); ++s) {
        const MeasurementRecord &r = *by_setting[s];
        if (r.expectations.size() != readouts) {
            throw ContractError("record for setting " + std::to_string(plan.selected[s]) +
                                " has the wrong number of expectations");
        }
        for (std::uint64_t j = 1; j <= readouts; ++j) {
            const auto &[col, sign] = plan.mu_map[s][j - 1];
            sums[col - 1] += sign * r.expectations[j - 1] * norm;
            counts[col - 1] += 1;
        }
    }

    std::vector<std::uint64_t> missing;
    for (std::uint64_t c = 1; c <= cols; ++c) {
        if (counts[c - 1] == 0 && c != 1) missing.push_back(c);
    }
    if (!missing.empty()) {
        throw ReconstructionError("coefficients undetermined: " + std::to_string(missing.size()),
                                  std::move(missing));
    }

    Reconstruction out;
    out.mu.resize(cols);
    for (std::uint64_t c = 1; c <= cols; ++c) {
        out.mu[c - 1] = counts[c - 1] ? sums[c - 1] / counts[c - 1] : 0.0;
    }
    out.mu[0] = norm;  // identity coefficient is fixed by normalization

    check_sim_cap(plan.n);
    const Eigen::Index dim = Eigen::Index{1} << plan.n;
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (std::uint64_t c = 1; c <= cols; ++c) {
        if (out.mu[c - 1] != 0.0) {
            rho += out.mu[c - 1] * dense_pauli(pauli_from_index(plan.n, c));
        }
    }
    out.rho = DensityMatrix{plan.n, std::move(rho)};
    return out;
}

double infidelity(const DensityMatrix &rho0, const DensityMatrix &rho_e) {
    if (rho0.rho.rows() != rho_e.rho.rows()) {
        throw ContractError("states have different dimensions");
    }
    const double p0 = (rho0.rho * rho0.rho).trace().real();
    const double pe = (rho_e.rho * rho_e.rho).trace().real();
    if (p0 <= 0.0 || pe <= 0.0) {
        throw SingularityError("infidelity needs inputs with positive purity");
    }
    const double overlap = (rho0.rho * rho_e.rho).trace().real();
    return 1.0 - overlap / std::sqrt(p0 * pe);
}

std::vector<RobustnessPoint> robustness_experiment(
    int n, const TomographyPlan &plan_new, const TomographyPlan &plan_traditional,
    const ConnectivityGraph &graph, const std::vector<double> &eta_grid,
    const std::vector<double> &zeta_grid, int num_states, std::uint64_t seed,
    std::optional<long> shots) {
    check_sim_cap(n);
    if (eta_grid.empty() || zeta_grid.empty()) {
        throw RangeError("noise grids cannot be empty");
    }
    if (num_states < 1) throw RangeError("need at least one state");

    struct SchemeRef {
        const TomographyPlan *plan;
        const char *name;
    };
    const SchemeRef schemes[2] = {{&plan_new, "new"}, {&plan_traditional, "traditional"}};

    // infidelities[grid point][scheme][state]
    const std::size_t grid_size = eta_grid.size() * zeta_grid.size();
    std::vector<std::array<std::vector<double>, 2>> infidelities(grid_size);
    for (auto &point : infidelities) {
        point[0].resize(num_states);
        point[1].resize(num_states);
    }

    auto run_state = [&](int state_idx) {
        const DensityMatrix rho0 =
            random_pure_state(n, RngStream::derive(seed, static_cast<std::uint64_t>(state_idx)));
        std::size_t point = 0;
        for (double eta : eta_grid) {
            for (double zeta : zeta_grid) {
                for (int sch = 0; sch < 2; ++sch) {
                    NoiseModel noise;
                    noise.eta = eta;
                    noise.zeta = zeta;
                    noise.graph = graph;
                    noise.rng_seed = seed;
                    // Re-derived per grid point: grid points share underlying
                    // draws, which couples the curves.
                    RngStream rng(RngStream::derive(
                        seed, static_cast<std::uint64_t>(state_idx),
                        0x1000 + static_cast<std::uint64_t>(sch)));
                    const TomographyPlan &plan = *schemes[sch].plan;
                    std::vector<MeasurementRecord> records;
                    records.reserve(plan.selected.size());
                    for (std::size_t s = 0; s < plan.selected.size(); ++s) {
                        records.push_back(measure_setting(rho0, plan.settings[s], noise, rng,
                                                          shots, plan.selected[s]));
                    }
                    const Reconstruction rec = reconstruct(plan, records);
                    infidelities[point][sch][state_idx] = infidelity(rho0, rec.rho);
                }
                ++point;
            }
        }
    };

    const int threads = std::min(thread_cap(), num_states);
    if (threads <= 1) {
        for (int i = 0; i < num_states; ++i) run_state(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
                int i;
                while ((i = next.fetch_add(1)) < num_states) run_state(i);
            });
        }
        for (auto &t : pool) t.join();
    }

    std::vector<RobustnessPoint> out;
    out.reserve(grid_size * 2);
    std::size_t point = 0;
    for (double eta : eta_grid) {
        for (double zeta : zeta_grid) {
            for (int sch = 0; sch < 2; ++sch) {
                const std::vector<double> &vals = infidelities[point][sch];
                double mean = 0.0;
                for (double v : vals) mean += v;
                mean /= vals.size();
                double var = 0.0;
                for (double v : vals) var += (v - mean) * (v - mean);
                var = vals.size() > 1 ? var / (vals.size() - 1.0) : 0.0;
                RobustnessPoint row;
                row.scheme = schemes[sch].name;
                row.eta = eta;
                row.zeta = zeta;
                row.mean_infidelity = mean;
                row.std_error = std::sqrt(var / vals.size());
                row.num_states = num_states;
                row.seed = seed;
                out.push_back(std::move(row));
            }
            ++point;
        }
    }
    return out;
}

}  // namespace tomo
