// Copyright 2026 The wcav Authors
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

#include "validate_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "wcav/entanglement.hpp"
#include "wcav/kernels.hpp"
#include "wcav/protocol.hpp"

namespace wcav::cli {

namespace {

struct Draw {
    ModelParams params;
    BasisPtr basis;
};

double uniform(std::mt19937_64 &rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(std::mt19937_64 &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Lab or interaction frame, detuned modes, unequal couplings, and truncations
// that admit multi-photon states.
Draw random_model(std::mt19937_64 &rng) {
    Draw d;
    const int n = uniform_int(rng, 1, 4);
    d.params.n_modes = n;
    d.params.frame = uniform_int(rng, 0, 1) == 0 ? Frame::Lab : Frame::Interaction;
    d.params.omega_atom = uniform(rng, 0.0, 20.0);
    for (int i = 0; i < n; ++i) {
        d.params.omega_modes.push_back(d.params.omega_atom + uniform(rng, -2.0, 2.0));
        d.params.couplings.push_back(uniform(rng, 0.1, 3.0));
    }
    const int n_max = uniform_int(rng, 1, 2);
    const int cap_choice = uniform_int(rng, 0, 3);
    const std::optional<int> cap = cap_choice == 0 ? std::nullopt : std::optional<int>(cap_choice);
    d.basis = build_basis(n, n_max, cap);
    return d;
}

StateVector random_state(const BasisPtr &basis, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> amps(basis->dimension());
    for (cplx &a : amps) {
        a = {normal(rng), normal(rng)};
    }
    return StateVector::normalized(basis, std::move(amps));
}

double max_amplitude_gap(const StateVector &a, const StateVector &b) {
    double gap = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        gap = std::max(gap, std::abs(a.amplitude(k) - b.amplitude(k)));
    }
    return gap;
}

CheckResult finish(std::string name, double measured, double tolerance, std::string detail = {}) {
    return {std::move(name), measured, tolerance, measured <= tolerance, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_validation_suite(std::uint64_t seed, HamiltonianFault fault) {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(seed);
    constexpr int kDraws = 50;

    double herm = 0.0, comm = 0.0, drift = 0.0, compose = 0.0;
    for (int d = 0; d < kDraws; ++d) {
        const Draw draw = random_model(rng);
        const ComplexMatrix raw = assemble_hamiltonian(draw.params, *draw.basis, fault);
        herm = std::max(herm, hermiticity_error(raw));
        comm = std::max(comm, commutator_norm(raw, excitation_operator(draw.basis).matrix()));

        const HermitianOperator h = build_hamiltonian(draw.params, draw.basis);
        const SpectralPropagator prop(h);
        const StateVector psi = random_state(draw.basis, rng);
        const double t1 = uniform(rng, 0.0, 5.0);
        const double t2 = uniform(rng, 0.0, 5.0);
        const std::vector<cplx> raw_out = prop.apply_raw(psi.amplitudes(), t1 + t2);
        drift = std::max(drift, std::abs(std::sqrt(kernels::norm_sq(raw_out)) - 1.0));
        compose = std::max(compose, max_amplitude_gap(prop.apply(prop.apply(psi, t1), t2), prop.apply(psi, t1 + t2)));
    }
    results.push_back(finish("hermiticity", herm, 1e-12, "50 random models"));
    results.push_back(finish("excitation_conservation", comm, 1e-13, "max |[H,N]|"));
    results.push_back(finish("unitarity", drift, 1e-10, "| ||U psi|| - 1 |"));
    results.push_back(finish("composition", compose, 1e-9, "U(t2)U(t1) vs U(t1+t2)"));

    double oracle = 0.0;
    for (int d = 0; d < 100; ++d) {
        const int n = uniform_int(rng, 1, 6);
        const double eps = uniform(rng, 0.1, 10.0);
        const double t = uniform(rng, 0.0, 4.0 * std::numbers::pi / eps);
        const ModelParams params = ModelParams::resonant(n, eps);
        const BasisPtr basis = default_basis(n);
        oracle = std::max(oracle, max_amplitude_gap(evolve_closed_form(params, t, basis),
                                                    propagate_numeric(build_hamiltonian(params, basis),
                                                                      initial_state(basis), t)));
    }
    results.push_back(finish("oracle_equivalence", oracle, 1e-8, "100 resonant draws"));

    double rabi = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const RabiPeriod r = measure_rabi_period(n, 1.0);
        const double expected = 2.0 * std::numbers::pi / std::sqrt(static_cast<double>(n));
        rabi = std::max(rabi, std::abs(r.amplitude_period - expected) / expected);
    }
    results.push_back(finish("rabi_period", rabi, 1e-6, "relative error vs 2pi/(sqrt(N) e), N=1..6"));

    double w_err = 0.0, ghz_err = 0.0;
    for (int n = 3; n <= 8; ++n) {
        const BasisPtr basis = build_basis(n, 1, std::nullopt);
        const StateVector w = w_state(n, basis);
        const StateVector ghz = ghz_state(n, basis);
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                w_err = std::max(w_err, std::abs(concurrence(partial_trace(w, {a, b})) - 2.0 / n));
                ghz_err = std::max(ghz_err, concurrence(partial_trace(ghz, {a, b})));
            }
        }
    }
    results.push_back(finish("w_pair_concurrence", w_err, 1e-9, "|C - 2/n|, n=3..8"));
    results.push_back(finish("ghz_pair_concurrence", ghz_err, 1e-12, "C, n=3..8"));

    {
        const int n = 3;
        const double eps = 1.0;
        const double t_star = optimal_time(n, eps);
        SweepSpec spec{SweepParameter::TimingError, {}, 1, seed};
        for (int k = 0; k <= 40; ++k) {
            spec.grid.push_back(-0.5 * t_star + k * (t_star / 40.0));
        }
        const SweepResult sweep = timing_error_sweep(n, eps, spec);
        double gap = 0.0;
        for (const SweepRow &row : sweep.rows) {
            const double c = std::cos(std::sqrt(3.0) * row.x);
            gap = std::max(gap, std::abs(row.fidelity_mean - c * c));
        }
        results.push_back(finish("timing_error_law", gap, 1e-8, "41 points, n=3"));
    }

    double frames = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const double eps = uniform(rng, 0.5, 2.0);
        const double t = uniform(rng, 0.0, 10.0);
        const BasisPtr basis = build_basis(n, 1, std::nullopt);
        const StateVector psi0 = initial_state(basis);
        const StateVector lab =
            propagate_numeric(build_hamiltonian(ModelParams::resonant(n, eps, Frame::Lab, 25.0), basis), psi0, t);
        const StateVector rot = propagate_numeric(build_hamiltonian(ModelParams::resonant(n, eps), basis), psi0, t);
        for (std::size_t k = 0; k < basis->dimension(); ++k) {
            frames = std::max(frames, std::abs(std::norm(lab.amplitude(k)) - std::norm(rot.amplitude(k))));
        }
    }
    results.push_back(finish("frame_equivalence", frames, 1e-10, "lab vs interaction |amp|^2"));

    double kernel_gap = 0.0;
    {
        std::normal_distribution<double> normal;
        for (std::size_t len : {1u, 2u, 3u, 7u, 64u, 513u}) {
            std::vector<cplx> x(len), y(len);
            for (std::size_t i = 0; i < len; ++i) {
                x[i] = {normal(rng), normal(rng)};
                y[i] = {normal(rng), normal(rng)};
            }
            const kernels::KernelTable &ref = kernels::scalar::table;
            const double scale = static_cast<double>(len);
            for (kernels::Backend b : kernels::available_backends()) {
                const kernels::KernelTable &k = *kernels::table_for(b);
                kernel_gap = std::max(kernel_gap, std::abs(k.dotc(x.data(), y.data(), len) -
                                                           ref.dotc(x.data(), y.data(), len)) / scale);
                kernel_gap = std::max(kernel_gap, std::abs(k.dotu(x.data(), y.data(), len) -
                                                           ref.dotu(x.data(), y.data(), len)) / scale);
                kernel_gap = std::max(kernel_gap, std::abs(k.norm_sq(x.data(), len) - ref.norm_sq(x.data(), len)) / scale);
            }
        }
    }
    results.push_back(finish("kernel_equivalence", kernel_gap, 1e-13,
                             "SIMD vs scalar, active = " + std::string(kernels::backend_name(kernels::active().backend))));
    return results;
}

}  // namespace wcav::cli
