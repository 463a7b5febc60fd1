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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "validate_suite.hpp"
#include "wcav/entanglement.hpp"
#include "wcav/errors.hpp"
#include "wcav/io.hpp"
#include "wcav/kernels.hpp"

namespace wcav::cli {

using nlohmann::json;

namespace {

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Simulate:
            return "simulate";
        case Command::Sweep:
            return "sweep";
        case Command::Entanglement:
            return "entanglement";
        case Command::Validate:
            return "validate";
    }
    return "unknown";
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Writes `files` (path -> content) through temporaries renamed into place, so
// a failure never leaves partial output behind. Path "-" goes to `out`.
void write_outputs(const std::vector<std::pair<std::string, std::string>> &files, std::ostream &out) {
    namespace fs = std::filesystem;
    std::vector<fs::path> temps;
    std::vector<fs::path> finals;
    try {
        for (const auto &[path, content] : files) {
            if (path == "-") {
                out << content;
                continue;
            }
            const fs::path tmp = fs::path(path).concat(".partial");
            temps.push_back(tmp);
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) {
                throw InputError("cannot open output file " + path);
            }
            f << content;
            f.close();
            if (!f) {
                throw InputError("failed writing output file " + path);
            }
        }
        std::size_t t = 0;
        for (const auto &[path, content] : files) {
            if (path == "-") {
                continue;
            }
            fs::rename(temps[t++], path);
            finals.emplace_back(path);
        }
    } catch (...) {
        std::error_code ec;
        for (const auto &p : temps) {
            fs::remove(p, ec);
        }
        for (const auto &p : finals) {
            fs::remove(p, ec);
        }
        throw;
    }
}

std::string key_value_csv(const json &flat) {
    std::ostringstream csv;
    csv << "key,value\n";
    for (const auto &[key, value] : flat.items()) {
        csv << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return csv.str();
}

std::string render(const RunConfig &config, const json &report) {
    json doc = {{"schema_version", io::kSchemaVersion},
                {"command", std::string(command_name(config.command))},
                {"config", config_json(config)},
                {"report", report}};
    if (config.format == Format::Json) {
        return doc.dump(2) + "\n";
    }
    return key_value_csv(doc.flatten());
}

// Internal time from a CLI time value.
double to_internal_time(const RunConfig &c, double value) { return c.si ? value : value / c.epsilon; }

double lab_omega(const RunConfig &c) { return c.si ? c.omega : c.omega * c.epsilon; }

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out;
    for (int k = 0; k < count; ++k) {
        out.push_back(count == 1 ? lo : lo + (hi - lo) * k / (count - 1));
    }
    return out;
}

std::vector<double> default_grid(SweepParameter p, int n) {
    switch (p) {
        case SweepParameter::TimingError: {
            // Offsets within +-20% of t*, in units of 1/epsilon.
            const double t_star = optimal_time(n, 1.0);
            return linspace(-0.2 * t_star, 0.2 * t_star, 21);
        }
        case SweepParameter::CouplingDisorder:
            return {0.0, 0.01, 0.02, 0.05, 0.1, 0.2};
        case SweepParameter::Detuning:
            return linspace(-2.0, 2.0, 21);
        case SweepParameter::ModeCount:
            return {1, 2, 3, 4, 5, 6, 7, 8};
    }
    return {};
}

}  // namespace

void RunConfig::validate() const {
    if (n_modes < 1) {
        throw InputError("--n must be >= 1");
    }
    if (!std::isfinite(epsilon) || epsilon <= 0.0) {
        throw InputError("--epsilon must be finite and > 0");
    }
    if (time && !std::isfinite(*time)) {
        throw InputError("--time must be finite");
    }
    if (n_max < 1) {
        throw InputError("--nmax must be >= 1");
    }
    if (excitation_cap && *excitation_cap < 0) {
        throw InputError("--cap must be >= 0 or 'none'");
    }
    if (!std::isfinite(omega)) {
        throw InputError("--omega must be finite");
    }
    if (command == Command::Sweep) {
        if (!sweep) {
            throw InputError("sweep requires a parameter and grid");
        }
        sweep->validate();
    }
    if (command == Command::Entanglement && n_modes < 2) {
        throw InputError("entanglement needs --n >= 2");
    }
    if (!inject_fault.empty() && inject_fault != "hermiticity") {
        throw InputError("unknown fault '" + inject_fault + "'");
    }
}

json config_json(const RunConfig &c) {
    json j = {{"command", std::string(command_name(c.command))},
              {"n_modes", c.n_modes},
              {"epsilon", io::round12(c.epsilon)},
              {"time", c.time ? json(io::round12(*c.time)) : json(nullptr)},
              {"output_path", c.output_path},
              {"format", c.format == Format::Csv ? "csv" : "json"},
              {"frame", c.frame == Frame::Lab ? "lab" : "interaction"},
              {"omega", io::round12(c.omega)},
              {"n_max", c.n_max},
              {"excitation_cap", c.excitation_cap ? json(*c.excitation_cap) : json("none")},
              {"dump_state", c.dump_state},
              {"si", c.si},
              {"seed", c.seed},
              {"kernels", std::string(kernels::backend_name(kernels::active().backend))}};
    if (c.sweep) {
        json grid = json::array();
        for (double x : c.sweep->grid) {
            grid.push_back(io::round12(x));
        }
        j["sweep"] = {{"parameter", std::string(sweep_parameter_name(c.sweep->parameter))},
                      {"grid", grid},
                      {"trials", c.sweep->trials},
                      {"seed", c.sweep->seed}};
    }
    return j;
}

std::optional<RunConfig> parse_args(int argc, const char *const *argv, std::ostream &out) {
    CLI::App app{"One-shot W-state preparation in cavity QED: simulation, sweeps and checks", "wcav"};
    app.set_config("--config", "", "Flat key = value config file; command-line flags override it");
    app.require_subcommand(1, 1);

    RunConfig c;
    std::string frame = "interaction";
    std::string format;
    std::string cap = "1";
    std::string param = "timing";
    std::vector<double> grid;
    std::vector<double> lin;
    int trials = 1;
    std::optional<double> time;

    app.add_option("--n", c.n_modes, "Number of cavity modes")->capture_default_str();
    app.add_option("--epsilon", c.epsilon, "Atom-cavity coupling")->capture_default_str();
    app.add_option("--time", time, "Interaction time (units of 1/epsilon; seconds with --si)");
    app.add_option("--frame", frame, "lab|interaction")->check(CLI::IsMember({"lab", "interaction"}))->capture_default_str();
    app.add_option("--omega", c.omega, "Resonant frequency for the lab frame (units of epsilon)")->capture_default_str();
    app.add_option("--nmax", c.n_max, "Photon truncation per mode")->capture_default_str();
    app.add_option("--cap", cap, "Excitation cap (integer or 'none')")->capture_default_str();
    app.add_option("--out", c.output_path, "Output path ('-' for stdout)")->capture_default_str();
    app.add_option("--format", format, "csv|json (default: csv for sweep, json otherwise)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    app.add_flag("--dump-state", c.dump_state, "Include state amplitudes in the report");
    app.add_flag("--si", c.si, "epsilon/omega in rad/s and times in seconds");
    app.add_flag("--timestamp", c.timestamp, "Record the wall-clock time in sweep metadata");
    app.add_option("--param", param, "Sweep parameter: timing|disorder|detuning|modes")
        ->check(CLI::IsMember({"timing", "disorder", "detuning", "modes"}))
        ->capture_default_str();
    app.add_option("--grid", grid, "Sweep grid values")->delimiter(',');
    app.add_option("--linspace", lin, "Sweep grid as lo,hi,count")->delimiter(',')->expected(3);
    app.add_option("--trials", trials, "Trials per grid point (disorder)")->capture_default_str();
    app.add_option("--inject-fault", c.inject_fault)->group("");

    app.add_subcommand("simulate", "Evolve |e,0..0> and score against |W>|g>")->fallthrough();
    app.add_subcommand("sweep", "Robustness sweep around the ideal protocol")->fallthrough();
    app.add_subcommand("entanglement", "Pairwise concurrence of reduced W and GHZ states")->fallthrough();
    app.add_subcommand("validate", "Run the randomized invariant suite")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::ParseError &e) {
        throw InputError(e.what());
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    c.command = sub == "simulate" ? Command::Simulate
                : sub == "sweep"  ? Command::Sweep
                : sub == "entanglement" ? Command::Entanglement
                                        : Command::Validate;
    c.frame = frame == "lab" ? Frame::Lab : Frame::Interaction;
    if (format.empty()) {
        c.format = c.command == Command::Sweep ? Format::Csv : Format::Json;
    } else {
        c.format = format == "csv" ? Format::Csv : Format::Json;
    }
    if (cap == "none") {
        c.excitation_cap = std::nullopt;
    } else {
        try {
            std::size_t used = 0;
            c.excitation_cap = std::stoi(cap, &used);
            if (used != cap.size()) {
                throw InputError("bad --cap");
            }
        } catch (const std::exception &) {
            throw InputError("--cap must be an integer or 'none', got '" + cap + "'");
        }
    }
    if (!std::isfinite(c.epsilon) || c.epsilon <= 0.0) {
        throw InputError("--epsilon must be finite and > 0");
    }

    if (c.command == Command::Simulate) {
        c.time = time ? *time : (c.si ? optimal_time(std::max(c.n_modes, 1), c.epsilon) : optimal_time(std::max(c.n_modes, 1), 1.0));
    } else {
        c.time = time;
    }

    if (c.command == Command::Sweep) {
        SweepSpec spec;
        spec.parameter = *parse_sweep_parameter(param);
        spec.trials = trials;
        spec.seed = c.seed;
        if (!grid.empty() && !lin.empty()) {
            throw InputError("--grid and --linspace are mutually exclusive");
        }
        if (!lin.empty()) {
            if (lin[2] < 1.0 || lin[2] != std::floor(lin[2])) {
                throw InputError("--linspace count must be a positive integer");
            }
            grid = linspace(lin[0], lin[1], static_cast<int>(lin[2]));
        }
        if (grid.empty()) {
            grid = default_grid(spec.parameter, std::max(c.n_modes, 1));
        } else if (c.si) {
            // SI grids are converted to the library's epsilon units.
            for (double &x : grid) {
                if (spec.parameter == SweepParameter::TimingError) {
                    x *= c.epsilon;
                } else if (spec.parameter == SweepParameter::Detuning) {
                    x /= c.epsilon;
                }
            }
        }
        spec.grid = std::move(grid);
        c.sweep = std::move(spec);
    }
    c.validate();
    return c;
}

// ---------------------------------------------------------------------------

int cmd_simulate(const RunConfig &config, std::ostream &out, std::ostream & /*err*/) {
    config.validate();
    const int n = config.n_modes;
    const double t = to_internal_time(config, config.time.value_or(optimal_time(n, 1.0)));
    const BasisPtr basis = build_basis(n, config.n_max, config.excitation_cap);

    const ModelParams params = ModelParams::resonant(n, config.epsilon, config.frame,
                                                     config.frame == Frame::Lab ? lab_omega(config) : 0.0);
    const StateVector psi = propagate_numeric(build_hamiltonian(params, basis), initial_state(basis), t);

    // The closed form is written in the interaction frame; in the lab frame
    // only populations are comparable.
    const StateVector closed = evolve_closed_form(ModelParams::resonant(n, config.epsilon), t, basis);
    double gap = 0.0;
    for (std::size_t k = 0; k < basis->dimension(); ++k) {
        gap = std::max(gap, config.frame == Frame::Interaction
                                ? std::abs(closed.amplitude(k) - psi.amplitude(k))
                                : std::abs(std::norm(closed.amplitude(k)) - std::norm(psi.amplitude(k))));
    }

    json report = {{"t", io::round12(*config.time)},
                   {"epsilon_t", io::round12(config.epsilon * t)},
                   {"t_star", io::round12(config.si ? optimal_time(n, config.epsilon) : optimal_time(n, 1.0))},
                   {"fidelity_W", io::round12(fidelity(w_state(n, basis), psi))},
                   {"success_prob", io::round12(success_probability(psi, n))},
                   {"atom_ground_prob", io::round12(atom_ground_probability(psi))},
                   {"closed_vs_numeric_gap", io::round12(gap)},
                   {"gap_metric", config.frame == Frame::Interaction ? "amplitude" : "population"},
                   {"basis_dimension", basis->dimension()}};
    if (config.dump_state) {
        report["state"] = io::state_to_json(psi);
    }
    write_outputs({{config.output_path, render(config, report)}}, out);
    return kExitOk;
}

int cmd_sweep(const RunConfig &config, std::ostream &out, std::ostream & /*err*/) {
    config.validate();
    SweepResult result = run_sweep(config.n_modes, config.epsilon, *config.sweep);
    if (config.timestamp) {
        result.metadata.timestamp = utc_timestamp();
    }
    if (config.format == Format::Json) {
        json doc = io::sweep_json(result);
        doc["config"] = config_json(config);
        write_outputs({{config.output_path, doc.dump(2) + "\n"}}, out);
        return kExitOk;
    }
    std::vector<std::pair<std::string, std::string>> files{{config.output_path, io::sweep_csv(result)}};
    if (config.output_path != "-") {
        json meta = {{"schema_version", io::kSchemaVersion},
                     {"metadata", io::sweep_metadata_json(result.metadata)},
                     {"config", config_json(config)}};
        files.emplace_back(config.output_path + ".meta.json", meta.dump(2) + "\n");
    }
    write_outputs(files, out);
    return kExitOk;
}

int cmd_entanglement(const RunConfig &config, std::ostream &out, std::ostream & /*err*/) {
    config.validate();
    const int n = config.n_modes;
    const BasisPtr basis = build_basis(n, 1, std::nullopt);
    const StateVector w = w_state(n, basis);
    const StateVector ghz = ghz_state(n, basis);

    json rows = json::array();
    std::ostringstream csv;
    csv << "mode_a,mode_b,traced_out,concurrence_w,concurrence_ghz\n";
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            std::vector<int> traced{kAtomSubsystem};
            std::string traced_label = "atom";
            for (int m = 1; m <= n; ++m) {
                if (m != a && m != b) {
                    traced.push_back(m);
                    traced_label += ";" + std::to_string(m);
                }
            }
            const double cw = concurrence(partial_trace(w, {a, b}));
            const double cg = concurrence(partial_trace(ghz, {a, b}));
            rows.push_back({{"pair", {a, b}},
                            {"traced_out", traced},
                            {"concurrence_w", io::round12(cw)},
                            {"concurrence_ghz", io::round12(cg)}});
            csv << a << ',' << b << ',' << traced_label << ',' << io::format_number(cw) << ','
                << io::format_number(cg) << '\n';
        }
    }
    if (config.format == Format::Csv) {
        std::vector<std::pair<std::string, std::string>> files{{config.output_path, csv.str()}};
        if (config.output_path != "-") {
            json meta = {{"schema_version", io::kSchemaVersion}, {"config", config_json(config)}};
            files.emplace_back(config.output_path + ".meta.json", meta.dump(2) + "\n");
        }
        write_outputs(files, out);
        return kExitOk;
    }
    json report = {{"pairs", rows}, {"expected_w", io::round12(2.0 / n)}, {"expected_ghz", 0.0}};
    write_outputs({{config.output_path, render(config, report)}}, out);
    return kExitOk;
}

int cmd_validate(const RunConfig &config, std::ostream &out, std::ostream & /*err*/) {
    config.validate();
    const HamiltonianFault fault =
        config.inject_fault == "hermiticity" ? HamiltonianFault::FlipOneCouplingSign : HamiltonianFault::None;
    const std::vector<CheckResult> checks = run_validation_suite(config.seed, fault);

    int passed = 0;
    json items = json::array();
    for (const CheckResult &c : checks) {
        passed += c.passed ? 1 : 0;
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  measured=" << io::format_number(c.measured)
            << "  tol=" << io::format_number(c.tolerance);
        if (!c.detail.empty()) {
            out << "  (" << c.detail << ")";
        }
        out << '\n';
        items.push_back({{"name", c.name},
                         {"measured", c.measured},
                         {"tolerance", c.tolerance},
                         {"passed", c.passed},
                         {"detail", c.detail}});
    }
    const int run = static_cast<int>(checks.size());
    const int failed = run - passed;
    out << "checks_run=" << run << " passed=" << passed << " failed=" << failed << '\n';
    if (config.output_path != "-") {
        json report = {{"checks", items}, {"checks_run", run}, {"passed", passed}, {"failed", failed}};
        write_outputs({{config.output_path, render(config, report)}}, out);
    }
    return failed == 0 ? kExitOk : kExitValidationFailed;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    try {
        const std::optional<RunConfig> config = parse_args(argc, argv, out);
        if (!config) {
            return kExitOk;
        }
        switch (config->command) {
            case Command::Simulate:
                return cmd_simulate(*config, out, err);
            case Command::Sweep:
                return cmd_sweep(*config, out, err);
            case Command::Entanglement:
                return cmd_entanglement(*config, out, err);
            case Command::Validate:
                return cmd_validate(*config, out, err);
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"wcav"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wcav::cli
