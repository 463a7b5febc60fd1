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

#pragma once

// The one-shot W-state preparation: start in |e,0..0>, let the atom couple to
// all N cavities for t* = pi / (2 sqrt(N) e), end in |W_N>|g>. Also the
// robustness sweeps around that ideal point.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcav/fock_space.hpp"

namespace wcav {

/// pi / (2 sqrt(n) epsilon). Throws InputError for n < 1 or epsilon <= 0.
double optimal_time(int n, double epsilon);

struct ProtocolOutcome {
    StateVector state;
    double t_star;
    double fidelity;
    double success_prob;
    double atom_ground_prob;
};

/// Closed-form evolution of |e,0..0> to t* scored against |W_n>|g>.
ProtocolOutcome run_protocol(int n, double epsilon);

enum class SweepParameter { TimingError, CouplingDisorder, Detuning, ModeCount };

std::string_view sweep_parameter_name(SweepParameter p);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);

/// Grid units: TimingError offsets in 1/epsilon, CouplingDisorder relative
/// standard deviations, Detuning in units of epsilon, ModeCount integers.
struct SweepSpec {
    SweepParameter parameter = SweepParameter::TimingError;
    std::vector<double> grid;
    int trials = 1;
    std::uint64_t seed = 0;

    /// Throws InputError when the grid is empty or non-finite, trials < 1,
    /// disorder values are negative or mode counts are not positive integers.
    void validate() const;
};

struct SweepRow {
    double x;
    double fidelity_mean;
    double fidelity_min;
    double fidelity_max;
    double success_prob_mean;
};

struct SweepMetadata {
    SweepParameter parameter = SweepParameter::TimingError;
    int n_modes = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    int trials = 1;
    std::optional<std::string> timestamp;
    std::string rng;
    std::string model;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    SweepMetadata metadata;
};

inline constexpr std::string_view kRngDescription =
    "mt19937_64 per trial, seeded by splitmix64(seed, trial); normals by Box-Muller (cosine branch)";

/// Fidelity with |W_n>|g> at t* + x/epsilon, computed with the numeric
/// propagator. Analytically cos^2(sqrt(n) x).
SweepResult timing_error_sweep(int n, double epsilon, const SweepSpec &spec);

/// Couplings e_i = epsilon (1 + sigma xi_i), xi_i standard normal, redrawn
/// while e_i <= 0; evaluated at the nominal t*. The same trial stream is
/// reused for every sigma on the grid.
SweepResult coupling_disorder_sweep(int n, double epsilon, const SweepSpec &spec);

/// All modes shifted by x * epsilon from the atomic frequency; numeric
/// propagation in the frame rotating at the atomic frequency, read at t*.
SweepResult detuning_sweep(int n, double epsilon, const SweepSpec &spec);

/// Ideal protocol for each n on the grid (numeric propagator). `n` in the
/// metadata is 0.
SweepResult mode_count_sweep(double epsilon, const SweepSpec &spec);

/// Dispatches on spec.parameter.
SweepResult run_sweep(int n, double epsilon, const SweepSpec &spec);

struct ScalingRow {
    int n;
    double t_star;
    double fidelity_closed;
    double fidelity_numeric;
    double amplitude_gap;
};

std::vector<ScalingRow> n_scaling_table(std::span<const int> n_list, double epsilon);

struct RabiPeriod {
    /// Spacing of upward zero crossings of Re <e,0..0|psi(t)>.
    double amplitude_period;
    /// Spacing of consecutive zeros of the |e,0..0> population.
    double population_zero_spacing;
    int crossings;
};

/// Measures the collective Rabi oscillation from the numeric propagator
/// alone: scans [0, 3 * 2pi/epsilon] and refines crossings by bisection.
RabiPeriod measure_rabi_period(int n, double epsilon);

}  // namespace wcav
