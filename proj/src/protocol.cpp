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

#include "wcav/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "wcav/dynamics.hpp"
#include "wcav/entanglement.hpp"
#include "wcav/errors.hpp"

namespace wcav {

namespace {

void require_positive_epsilon(double epsilon) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0) {
        throw InputError("epsilon must be finite and > 0");
    }
}

// Worker count: WCAV_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
std::size_t worker_budget() {
    if (const char *env = std::getenv("WCAV_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) on up to worker_budget() threads.
// Each index writes only its own output slot, so ordering is unaffected.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body) {
    const std::size_t workers = std::min(count, worker_budget());
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(splitmix64(seed) ^ trial); }

// Box-Muller on 53-bit uniforms; the cosine branch only, so one normal
// consumes exactly two engine outputs.
double standard_normal(std::mt19937_64 &rng) {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    const double u1 = static_cast<double>((rng() >> 11) + 1) * kScale;
    const double u2 = static_cast<double>(rng() >> 11) * kScale;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SweepMetadata make_metadata(const SweepSpec &spec, int n, double epsilon, std::string model) {
    SweepMetadata m;
    m.parameter = spec.parameter;
    m.n_modes = n;
    m.epsilon = epsilon;
    m.seed = spec.seed;
    m.trials = spec.trials;
    m.rng = std::string(kRngDescription);
    m.model = std::move(model);
    return m;
}

SweepRow single_sample_row(double x, double fid, double success) { return {x, fid, fid, fid, success}; }

void require_parameter(const SweepSpec &spec, SweepParameter expected) {
    spec.validate();
    if (spec.parameter != expected) {
        throw InputError("sweep spec parameter is " + std::string(sweep_parameter_name(spec.parameter)) + ", expected " +
                         std::string(sweep_parameter_name(expected)));
    }
}

}  // namespace

double optimal_time(int n, double epsilon) {
    if (n < 1) {
        throw InputError("optimal_time: n must be >= 1");
    }
    require_positive_epsilon(epsilon);
    return std::numbers::pi / (2.0 * std::sqrt(static_cast<double>(n)) * epsilon);
}

ProtocolOutcome run_protocol(int n, double epsilon) {
    const double t_star = optimal_time(n, epsilon);
    const ModelParams params = ModelParams::resonant(n, epsilon);
    StateVector psi = evolve_closed_form(params, t_star);
    const double fid = fidelity(w_state(n, psi.basis_ptr()), psi);
    const double success = success_probability(psi, n);
    const double ground = atom_ground_probability(psi);
    return {std::move(psi), t_star, fid, success, ground};
}

std::string_view sweep_parameter_name(SweepParameter p) {
    switch (p) {
        case SweepParameter::TimingError:
            return "timing";
        case SweepParameter::CouplingDisorder:
            return "disorder";
        case SweepParameter::Detuning:
            return "detuning";
        case SweepParameter::ModeCount:
            return "modes";
    }
    return "unknown";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
    for (SweepParameter p : {SweepParameter::TimingError, SweepParameter::CouplingDisorder, SweepParameter::Detuning,
                             SweepParameter::ModeCount}) {
        if (sweep_parameter_name(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (grid.empty()) {
        throw InputError("sweep grid is empty");
    }
    if (trials < 1) {
        throw InputError("sweep trials must be >= 1");
    }
    for (double x : grid) {
        if (!std::isfinite(x)) {
            throw InputError("sweep grid contains a non-finite value");
        }
        if (parameter == SweepParameter::CouplingDisorder && x < 0.0) {
            throw InputError("coupling disorder grid values must be >= 0");
        }
        if (parameter == SweepParameter::ModeCount && (x < 1.0 || x != std::floor(x))) {
            throw InputError("mode-count grid values must be positive integers");
        }
    }
}

SweepResult timing_error_sweep(int n, double epsilon, const SweepSpec &spec) {
    require_parameter(spec, SweepParameter::TimingError);
    const double t_star = optimal_time(n, epsilon);
    const BasisPtr basis = default_basis(n);
    const SpectralPropagator propagator(build_hamiltonian(ModelParams::resonant(n, epsilon), basis));
    const StateVector psi0 = initial_state(basis);
    const StateVector target = w_state(n, basis);

    SweepResult result;
    result.metadata = make_metadata(spec, n, epsilon, "t = t* + x/epsilon; spectral propagator, interaction frame");
    result.rows.resize(spec.grid.size());
    parallel_for(spec.grid.size(), [&](std::size_t g) {
        const double x = spec.grid[g];
        const StateVector psi = propagator.apply(psi0, t_star + x / epsilon);
        result.rows[g] = single_sample_row(x, fidelity(target, psi), success_probability(psi, n));
    });
    return result;
}

SweepResult coupling_disorder_sweep(int n, double epsilon, const SweepSpec &spec) {
    require_parameter(spec, SweepParameter::CouplingDisorder);
    const double t_star = optimal_time(n, epsilon);
    const BasisPtr basis = default_basis(n);
    const StateVector target = w_state(n, basis);

    SweepResult result;
    result.metadata = make_metadata(
        spec, n, epsilon, "e_i = epsilon(1 + sigma xi_i), xi_i ~ N(0,1), redraw e_i <= 0; read at nominal t*");
    result.rows.resize(spec.grid.size());
    parallel_for(spec.grid.size(), [&](std::size_t g) {
        const double sigma = spec.grid[g];
        double fid_sum = 0.0, success_sum = 0.0;
        double fid_min = 1.0, fid_max = 0.0;
        for (int trial = 0; trial < spec.trials; ++trial) {
            std::mt19937_64 rng(trial_seed(spec.seed, static_cast<std::uint64_t>(trial)));
            ModelParams params = ModelParams::resonant(n, epsilon);
            for (double &e : params.couplings) {
                do {
                    e = epsilon * (1.0 + sigma * standard_normal(rng));
                } while (e <= 0.0);
            }
            const StateVector psi = evolve_closed_form_general(params, t_star, basis);
            const double fid = fidelity(target, psi);
            fid_sum += fid;
            success_sum += success_probability(psi, n);
            fid_min = std::min(fid_min, fid);
            fid_max = std::max(fid_max, fid);
        }
        const double trials = static_cast<double>(spec.trials);
        // Keep min <= mean <= max under rounding of the running sum.
        const double mean = std::clamp(fid_sum / trials, fid_min, fid_max);
        result.rows[g] = {sigma, mean, fid_min, fid_max, std::min(success_sum / trials, 1.0)};
    });
    return result;
}

SweepResult detuning_sweep(int n, double epsilon, const SweepSpec &spec) {
    require_parameter(spec, SweepParameter::Detuning);
    const double t_star = optimal_time(n, epsilon);
    const BasisPtr basis = default_basis(n);
    const StateVector psi0 = initial_state(basis);
    const StateVector target = w_state(n, basis);

    SweepResult result;
    result.metadata =
        make_metadata(spec, n, epsilon, "w_i = w0 + x epsilon for all modes; spectral propagator, frame rotating at w0");
    result.rows.resize(spec.grid.size());
    parallel_for(spec.grid.size(), [&](std::size_t g) {
        const double x = spec.grid[g];
        ModelParams params = ModelParams::resonant(n, epsilon);
        for (double &w : params.omega_modes) {
            w = params.omega_atom + x * epsilon;
        }
        const StateVector psi = propagate_numeric(build_hamiltonian(params, basis), psi0, t_star);
        result.rows[g] = single_sample_row(x, fidelity(target, psi), success_probability(psi, n));
    });
    return result;
}

SweepResult mode_count_sweep(double epsilon, const SweepSpec &spec) {
    require_parameter(spec, SweepParameter::ModeCount);
    require_positive_epsilon(epsilon);

    SweepResult result;
    result.metadata = make_metadata(spec, 0, epsilon, "ideal protocol per n at t*(n); spectral propagator");
    result.rows.resize(spec.grid.size());
    parallel_for(spec.grid.size(), [&](std::size_t g) {
        const int n = static_cast<int>(spec.grid[g]);
        const BasisPtr basis = default_basis(n);
        const StateVector psi = propagate_numeric(build_hamiltonian(ModelParams::resonant(n, epsilon), basis),
                                                  initial_state(basis), optimal_time(n, epsilon));
        result.rows[g] = single_sample_row(spec.grid[g], fidelity(w_state(n, basis), psi), success_probability(psi, n));
    });
    return result;
}

SweepResult run_sweep(int n, double epsilon, const SweepSpec &spec) {
    switch (spec.parameter) {
        case SweepParameter::TimingError:
            return timing_error_sweep(n, epsilon, spec);
        case SweepParameter::CouplingDisorder:
            return coupling_disorder_sweep(n, epsilon, spec);
        case SweepParameter::Detuning:
            return detuning_sweep(n, epsilon, spec);
        case SweepParameter::ModeCount:
            return mode_count_sweep(epsilon, spec);
    }
    throw InputError("unknown sweep parameter");
}

std::vector<ScalingRow> n_scaling_table(std::span<const int> n_list, double epsilon) {
    std::vector<ScalingRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        const double t_star = optimal_time(n, epsilon);
        const BasisPtr basis = default_basis(n);
        const ModelParams params = ModelParams::resonant(n, epsilon);
        const StateVector closed = evolve_closed_form(params, t_star, basis);
        const StateVector numeric = propagate_numeric(build_hamiltonian(params, basis), initial_state(basis), t_star);
        const StateVector target = w_state(n, basis);
        double gap = 0.0;
        for (std::size_t k = 0; k < basis->dimension(); ++k) {
            gap = std::max(gap, std::abs(closed.amplitude(k) - numeric.amplitude(k)));
        }
        rows.push_back({n, t_star, fidelity(target, closed), fidelity(target, numeric), gap});
    }
    return rows;
}

RabiPeriod measure_rabi_period(int n, double epsilon) {
    require_positive_epsilon(epsilon);
    const BasisPtr basis = default_basis(n);
    const SpectralPropagator propagator(build_hamiltonian(ModelParams::resonant(n, epsilon), basis));
    const StateVector psi0 = initial_state(basis);
    const std::size_t excited = basis->index_of(excited_vacuum(n));
    auto excited_amplitude = [&](double t) { return propagator.apply(psi0, t).amplitude(excited).real(); };

    const double horizon = 3.0 * 2.0 * std::numbers::pi / epsilon;
    constexpr int kSamples = 6000;
    const double step = horizon / kSamples;

    std::vector<double> upward;
    std::vector<double> zeros;
    double t_prev = 0.0;
    double f_prev = excited_amplitude(0.0);
    for (int s = 1; s <= kSamples; ++s) {
        const double t = s * step;
        const double f = excited_amplitude(t);
        if ((f_prev < 0.0) != (f < 0.0)) {
            double lo = t_prev, hi = t;
            const bool rising = f_prev < 0.0;
            for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) {
                    break;
                }
                if ((excited_amplitude(mid) < 0.0) == rising) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            const double root = 0.5 * (lo + hi);
            zeros.push_back(root);
            if (rising) {
                upward.push_back(root);
            }
        }
        t_prev = t;
        f_prev = f;
    }
    if (upward.size() < 2 || zeros.size() < 2) {
        throw NumericalError("Rabi scan found too few crossings to measure a period");
    }
    RabiPeriod out;
    out.amplitude_period = (upward.back() - upward.front()) / static_cast<double>(upward.size() - 1);
    out.population_zero_spacing = (zeros.back() - zeros.front()) / static_cast<double>(zeros.size() - 1);
    out.crossings = static_cast<int>(zeros.size());
    return out;
}

}  // namespace wcav
