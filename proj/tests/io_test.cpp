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

#include "wcav/io.hpp"

#include <gtest/gtest.h>

#include "wcav/errors.hpp"

namespace wcav::io {
namespace {

using nlohmann::json;

TEST(Io, number_formatting) {
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(0.1 + 0.2), "0.3");
    EXPECT_EQ(format_number(2.0 / 3.0), "0.666666666667");
    EXPECT_EQ(round12(0.1 + 0.2), 0.3);
}

TEST(Io, state_round_trip) {
    const StateVector psi = evolve_closed_form(ModelParams::resonant(3, 1.0), 0.37);
    const json doc = state_to_json(psi);
    EXPECT_EQ(doc["basis"]["n_modes"], 3);
    const StateVector back = state_from_json(json::parse(doc.dump()));
    ASSERT_EQ(back.dimension(), psi.dimension());
    for (std::size_t k = 0; k < psi.dimension(); ++k) {
        EXPECT_EQ(back.amplitude(k), psi.amplitude(k));
    }
}

TEST(Io, state_from_malformed_json) {
    EXPECT_THROW(state_from_json(json::object()), InputError);
    json doc = state_to_json(initial_state(build_basis(2)));
    doc["amplitudes"].erase(0);
    EXPECT_THROW(state_from_json(doc), InputError);
}

TEST(Io, hamiltonian_entries_are_row_major_nonzeros) {
    const json j = hamiltonian_to_json(build_hamiltonian(ModelParams::resonant(1, 0.5), build_basis(1)));
    EXPECT_EQ(j["dim"], 3);
    // Basis |g,0>, |g,1>, |e,0>: couplings at (1,2) and (2,1).
    EXPECT_EQ(j["entries"], json::parse("[[1,2,0.5,0.0],[2,1,0.5,0.0]]"));
}

TEST(Io, density_json_shape) {
    const DensityMatrix rho = partial_trace(w_state(3, build_basis(3)), {1, 2});
    const json j = density_to_json(rho);
    EXPECT_EQ(j["labels"], json::parse("[1,2]"));
    ASSERT_EQ(j["matrix"].size(), 4u);
    EXPECT_EQ(j["matrix"][1][2].size(), 2u);
    EXPECT_NEAR(j["matrix"][1][2][0].get<double>(), 1.0 / 3.0, 1e-15);
}

TEST(Io, sweep_csv_header_and_rows) {
    SweepSpec spec;
    spec.parameter = SweepParameter::TimingError;
    spec.grid = {0.0, 0.1};
    const SweepResult r = timing_error_sweep(2, 1.0, spec);
    const std::string csv = sweep_csv(r);
    EXPECT_EQ(csv.rfind("x,fidelity_mean,fidelity_min,fidelity_max,success_prob_mean\n0,1,1,1,1\n0.1,", 0), 0u);
    const json j = sweep_json(r);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    EXPECT_EQ(j["metadata"]["parameter"], "timing");
    EXPECT_TRUE(j["metadata"]["timestamp"].is_null());
    EXPECT_EQ(j["rows"].size(), 2u);
}

}  // namespace
}  // namespace wcav::io
