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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wcav/dynamics.hpp"
#include "wcav/protocol.hpp"

namespace wcav::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidationFailed = 1,
    kExitBadInput = 2,
    kExitNumerical = 3,
};

enum class Command { Simulate, Sweep, Entanglement, Validate };
enum class Format { Csv, Json };

/// Fully resolved invocation. Times are in units of 1/epsilon and detunings
/// in units of epsilon unless `si` is set, in which case epsilon and omega are
/// rad/s and times are seconds.
struct RunConfig {
    Command command = Command::Simulate;
    int n_modes = 3;
    double epsilon = 1.0;
    std::optional<double> time;
    std::optional<SweepSpec> sweep;
    std::string output_path = "-";
    Format format = Format::Json;
    Frame frame = Frame::Interaction;
    /// Resonant lab-frame frequency (units of epsilon unless `si`).
    double omega = 10.0;
    int n_max = 1;
    std::optional<int> excitation_cap = 1;
    bool dump_state = false;
    bool si = false;
    std::uint64_t seed = 0;
    bool timestamp = false;
    /// Test-only fault injection for `validate` ("hermiticity").
    std::string inject_fault;

    /// Throws InputError when a field is out of range.
    void validate() const;
};

nlohmann::json config_json(const RunConfig &config);

/// Parses argv into a resolved RunConfig. Throws InputError on bad input;
/// returns std::nullopt when help was requested (text already printed).
std::optional<RunConfig> parse_args(int argc, const char *const *argv, std::ostream &out);

int cmd_simulate(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_sweep(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_entanglement(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_validate(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Entry point: parse, dispatch, map exceptions to exit codes.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace wcav::cli
