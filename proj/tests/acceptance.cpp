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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "validate_suite.hpp"
#include "wcav/dynamics.hpp"
#include "wcav/entanglement.hpp"
#include "wcav/kernels.hpp"
#include "wcav/protocol.hpp"

namespace {

using namespace wcav;
using std::numbers::pi;

struct Verdict {
    bool passed;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char *f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double amplitude_gap(const StateVector &a, const StateVector &b) {
    double g = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        g = std::max(g, std::abs(a.amplitude(k) - b.amplitude(k)));
    }
    return g;
}

// 1. N=3 closed form at t = pi/(2 sqrt 3 eps): |amp| = 1/sqrt 3 on each
// |g,1_i>, 0 on |e,000>, success 1 within 1e-12; numeric within 1e-9; < 1 s.
Verdict criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const double eps = 1.0;
    const double t = pi / (2.0 * std::sqrt(3.0));
    const BasisPtr basis = default_basis(3);
    const ModelParams params = ModelParams::resonant(3, eps);
    const StateVector closed = evolve_closed_form(params, t, basis);
    double worst = std::abs(closed.amplitude(excited_vacuum(3)));
    for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(std::abs(closed.amplitude(single_photon(3, i))) - 1.0 / std::sqrt(3.0)));
    }
    const double success_err = std::abs(success_probability(closed, 3) - 1.0);
    const StateVector numeric = propagate_numeric(build_hamiltonian(params, basis), initial_state(basis), t);
    const double numeric_gap = std::max(amplitude_gap(numeric, closed), std::abs(success_probability(numeric, 3) - 1.0));
    const double elapsed = seconds_since(start);
    return {worst <= 1e-12 && success_err <= 1e-12 && numeric_gap <= 1e-9 && elapsed < 1.0,
            fmt("amp err %.3g, |P-1| %.3g, numeric gap %.3g", worst, success_err, numeric_gap) +
                fmt(", %.3f s (limit 1 s)", elapsed)};
}

// 2. Fidelity 1 within 1e-9 at t* for N = 1..8, closed form and numeric; < 5 s.
Verdict criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        const double t = optimal_time(n, 1.0);
        const BasisPtr basis = default_basis(n);
        const ModelParams params = ModelParams::resonant(n, 1.0);
        const StateVector target = w_state(n, basis);
        worst = std::max(worst, std::abs(fidelity(target, evolve_closed_form(params, t, basis)) - 1.0));
        const StateVector numeric = propagate_numeric(build_hamiltonian(params, basis), initial_state(basis), t);
        worst = std::max(worst, std::abs(fidelity(target, numeric) - 1.0));
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-9 && elapsed < 5.0, fmt("max |F-1| %.3g over N=1..8, %.3f s (limit 5 s)", worst, elapsed)};
}

// 3. 100 random resonant cases, closed form vs numeric per amplitude
// within 1e-8; < 10 s.
Verdict criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> n_dist(1, 6);
    std::uniform_real_distribution<double> eps_dist(0.1, 10.0);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const int n = n_dist(rng);
        const double eps = eps_dist(rng);
        const double t = std::uniform_real_distribution<double>(0.0, 4.0 * pi / eps)(rng);
        const BasisPtr basis = default_basis(n);
        const ModelParams params = ModelParams::resonant(n, eps);
        worst = std::max(worst, amplitude_gap(evolve_closed_form(params, t, basis),
                                              propagate_numeric(build_hamiltonian(params, basis), initial_state(basis), t)));
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-8 && elapsed < 10.0, fmt("max gap %.3g over 100 draws, %.3f s (limit 10 s)", worst, elapsed)};
}

// 4. Measured oscillation period equals 2 pi/(sqrt(N) eps) within relative
// 1e-6, N = 1..6. The period is read from the <e,0..0|psi(t)> amplitude;
// the population cos^2 repeats twice per amplitude period and its zero
// spacing is reported alongside.
Verdict criterion_4() {
    double worst = 0.0, worst_pop = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const double eps = 1.0;
        const double expected = 2.0 * pi / (std::sqrt(static_cast<double>(n)) * eps);
        const RabiPeriod r = measure_rabi_period(n, eps);
        worst = std::max(worst, std::abs(r.amplitude_period - expected) / expected);
        worst_pop = std::max(worst_pop, std::abs(2.0 * r.population_zero_spacing - expected) / expected);
    }
    return {worst <= 1e-6,
            fmt("max rel err %.3g (amplitude period); population zero spacing x2 rel err %.3g", worst, worst_pop)};
}

// 5. Hermiticity, [H,N], norm drift and composition on 50 random draws.
Verdict criterion_5() {
    const std::vector<cli::CheckResult> checks = cli::run_validation_suite(7);
    bool ok = true;
    std::string detail;
    for (const cli::CheckResult &c : checks) {
        if (c.name == "hermiticity" || c.name == "excitation_conservation" || c.name == "unitarity" ||
            c.name == "composition") {
            ok = ok && c.passed;
            detail += (detail.empty() ? "" : ", ") + c.name + fmt(" %.3g", c.measured) + fmt(" (tol %.0e)", c.tolerance);
        }
    }
    return {ok, detail};
}

// 6. Pair concurrence of reduced W_n = 2/n within 1e-9 and of GHZ_n = 0
// within 1e-12, n = 3..8, every pair.
Verdict criterion_6() {
    double w_err = 0.0, ghz_max = 0.0;
    int pairs = 0;
    for (int n = 3; n <= 8; ++n) {
        const BasisPtr basis = build_basis(n, 1, std::nullopt);
        const StateVector w = w_state(n, basis);
        const StateVector ghz = ghz_state(n, basis);
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                w_err = std::max(w_err, std::abs(concurrence(partial_trace(w, {a, b})) - 2.0 / n));
                ghz_max = std::max(ghz_max, concurrence(partial_trace(ghz, {a, b})));
                ++pairs;
            }
        }
    }
    return {w_err <= 1e-9 && ghz_max <= 1e-12,
            fmt("max |C_W - 2/n| %.3g, max C_GHZ %.3g, %.0f pairs", w_err, ghz_max, pairs)};
}

// 7. Timing sweep matches cos^2(sqrt(n) eps delta) within 1e-8 on 41 points
// across [-t*/2, t*/2], n = 3.
Verdict criterion_7() {
    const int n = 3;
    double worst = 0.0;
    for (double eps : {1.0, 2.5}) {
        const double t_star = optimal_time(n, eps);
        SweepSpec spec;
        spec.parameter = SweepParameter::TimingError;
        for (int k = 0; k <= 40; ++k) {
            // Grid entries are eps * delta.
            spec.grid.push_back(eps * (-0.5 * t_star + k * t_star / 40.0));
        }
        const SweepResult r = timing_error_sweep(n, eps, spec);
        for (const SweepRow &row : r.rows) {
            const double delta = row.x / eps;
            const double c = std::cos(std::sqrt(3.0) * eps * delta);
            worst = std::max(worst, std::abs(row.fidelity_mean - c * c));
        }
    }
    return {worst <= 1e-8, fmt("max |F - cos^2| %.3g over 41 points, eps in {1, 2.5}", worst)};
}

// 8. Reruns with identical config and seed give byte-identical CSV.
Verdict criterion_8() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "wcav_acceptance";
    fs::create_directories(dir);
    const std::vector<std::vector<std::string>> configs{
        {"sweep", "--param", "timing", "--n", "3"},
        {"sweep", "--param", "disorder", "--n", "3", "--trials", "200", "--seed", "42"},
        {"sweep", "--param", "detuning", "--n", "4", "--linspace", "-3,3,31"},
        {"sweep", "--param", "modes", "--epsilon", "0.7"},
    };
    auto slurp = [](const fs::path &p) {
        std::ifstream f(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    };
    bool ok = true;
    std::size_t bytes = 0;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            const fs::path out = dir / ("run" + std::to_string(c) + "_" + std::to_string(rep) + ".csv");
            std::vector<std::string> args = configs[c];
            args.insert(args.end(), {"--out", out.string()});
            std::ostringstream sink_out, sink_err;
            ok = ok && cli::run(args, sink_out, sink_err) == 0;
            const std::string text = slurp(out);
            ok = ok && !text.empty();
            if (rep == 0) {
                first = text;
                bytes += text.size();
            } else {
                ok = ok && text == first;
            }
        }
    }
    fs::remove_all(dir);
    return {ok, fmt("4 sweep configs rerun, %.0f bytes compared", static_cast<double>(bytes))};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria{
        {"deterministic W generation, N=3", criterion_1},
        {"general-N fidelity at t*, N=1..8", criterion_2},
        {"closed form vs numeric oracle, 100 draws", criterion_3},
        {"collective Rabi period 2pi/(sqrt(N) eps)", criterion_4},
        {"conservation and unitarity suite", criterion_5},
        {"W vs GHZ pair concurrence", criterion_6},
        {"timing-error law", criterion_7},
        {"sweep determinism", criterion_8},
    };
    std::printf("kernels: %s\n", std::string(kernels::backend_name(kernels::active().backend)).c_str());
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.passed ? 0 : 1;
        std::printf("%s criterion %zu: %s | %s\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    v.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
