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

// File formats.
//
//   state:        {"basis": {"n_modes", "n_max", "excitation_cap"}, "amplitudes": [[re, im], ...]}
//   hamiltonian:  {"dim": n, "entries": [[row, col, re, im], ...]}   nonzeros, row-major
//   density:      {"labels": [...], "matrix": [[[re, im], ...], ...]}
//   sweep CSV:    x,fidelity_mean,fidelity_min,fidelity_max,success_prob_mean
//   sweep JSON:   {"schema_version", "metadata": {...}, "rows": [{...}, ...]}
//
// Report scalars are written with 12 significant digits so regression diffs
// stay stable; state amplitudes keep full round-trip precision.

#include <string>

#include <json.hpp>

#include "wcav/dynamics.hpp"
#include "wcav/entanglement.hpp"
#include "wcav/fock_space.hpp"
#include "wcav/protocol.hpp"

namespace wcav::io {

inline constexpr const char *kSchemaVersion = "wcav-1";

/// printf "%.12g".
std::string format_number(double x);
/// x rounded to 12 significant digits.
double round12(double x);

nlohmann::json state_to_json(const StateVector &psi);
/// Rebuilds the basis from the stored truncation; throws InputError on a
/// malformed document.
StateVector state_from_json(const nlohmann::json &doc);

nlohmann::json hamiltonian_to_json(const ComplexMatrix &h);
inline nlohmann::json hamiltonian_to_json(const HermitianOperator &h) { return hamiltonian_to_json(h.matrix()); }

nlohmann::json density_to_json(const DensityMatrix &rho);

std::string sweep_csv(const SweepResult &result);
nlohmann::json sweep_metadata_json(const SweepMetadata &meta);
nlohmann::json sweep_json(const SweepResult &result);

}  // namespace wcav::io
