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

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "wcav/errors.hpp"

namespace wcav::io {

using nlohmann::json;

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

json state_to_json(const StateVector &psi) {
    const Basis &b = psi.basis();
    json amps = json::array();
    for (const cplx &a : psi.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    json cap = b.excitation_cap() ? json(*b.excitation_cap()) : json(nullptr);
    return {{"basis", {{"n_modes", b.n_modes()}, {"n_max", b.n_max()}, {"excitation_cap", cap}}},
            {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const json &doc) {
    try {
        const json &basis = doc.at("basis");
        std::optional<int> cap;
        if (!basis.at("excitation_cap").is_null()) {
            cap = basis.at("excitation_cap").get<int>();
        }
        BasisPtr b = build_basis(basis.at("n_modes").get<int>(), basis.at("n_max").get<int>(), cap);
        std::vector<cplx> amps;
        for (const json &pair : doc.at("amplitudes")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw InputError("amplitude entries must be [re, im] pairs");
            }
            amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return StateVector(std::move(b), std::move(amps));
    } catch (const json::exception &e) {
        throw InputError(std::string("malformed state document: ") + e.what());
    }
}

json hamiltonian_to_json(const ComplexMatrix &h) {
    json entries = json::array();
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = 0; c < h.cols(); ++c) {
            const cplx v = h(r, c);
            if (v != cplx{0.0, 0.0}) {
                entries.push_back({r, c, v.real(), v.imag()});
            }
        }
    }
    return {{"dim", h.rows()}, {"entries", std::move(entries)}};
}

json density_to_json(const DensityMatrix &rho) {
    json matrix = json::array();
    const ComplexMatrix &m = rho.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        matrix.push_back(std::move(row));
    }
    return {{"labels", rho.labels()}, {"matrix", std::move(matrix)}};
}

std::string sweep_csv(const SweepResult &result) {
    std::ostringstream out;
    out << "x,fidelity_mean,fidelity_min,fidelity_max,success_prob_mean\n";
    for (const SweepRow &r : result.rows) {
        out << format_number(r.x) << ',' << format_number(r.fidelity_mean) << ',' << format_number(r.fidelity_min) << ','
            << format_number(r.fidelity_max) << ',' << format_number(r.success_prob_mean) << '\n';
    }
    return out.str();
}

json sweep_metadata_json(const SweepMetadata &meta) {
    return {{"parameter", std::string(sweep_parameter_name(meta.parameter))},
            {"n_modes", meta.n_modes},
            {"epsilon", round12(meta.epsilon)},
            {"seed", meta.seed},
            {"trials", meta.trials},
            {"timestamp", meta.timestamp ? json(*meta.timestamp) : json(nullptr)},
            {"rng", meta.rng},
            {"model", meta.model}};
}

json sweep_json(const SweepResult &result) {
    json rows = json::array();
    for (const SweepRow &r : result.rows) {
        rows.push_back({{"x", round12(r.x)},
                        {"fidelity_mean", round12(r.fidelity_mean)},
                        {"fidelity_min", round12(r.fidelity_min)},
                        {"fidelity_max", round12(r.fidelity_max)},
                        {"success_prob_mean", round12(r.success_prob_mean)}});
    }
    return {{"schema_version", kSchemaVersion}, {"metadata", sweep_metadata_json(result.metadata)}, {"rows", std::move(rows)}};
}

}  // namespace wcav::io
