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

#include "wcav/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "wcav/errors.hpp"
#include "wcav/kernels.hpp"

namespace wcav {

DensityMatrix::DensityMatrix(std::vector<int> labels, std::vector<int> dims, ComplexMatrix matrix)
    : labels_(std::move(labels)), dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (labels_.size() != dims_.size() || labels_.empty()) {
        throw InputError("density matrix needs one local dimension per subsystem label");
    }
    std::size_t expected = 1;
    for (int d : dims_) {
        if (d < 1) {
            throw InputError("local dimensions must be >= 1");
        }
        expected *= static_cast<std::size_t>(d);
    }
    if (!matrix_.is_square() || matrix_.rows() != expected) {
        throw InputError("density matrix shape does not match the subsystem dimensions");
    }
    const double herm = hermiticity_error(matrix_);
    if (!(herm <= kHermiticityTolerance)) {
        throw NumericalError("density matrix is not Hermitian (error " + std::to_string(herm) + ")");
    }
    const cplx tr = trace(matrix_);
    if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
        throw NumericalError("density matrix trace " + std::to_string(tr.real()) + " is not 1");
    }
    const double floor = min_eigenvalue();
    if (!(floor >= kEigenvalueFloor)) {
        throw NumericalError("density matrix has negative eigenvalue " + std::to_string(floor));
    }
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    return kernels::norm_sq(matrix_.data());
}

double DensityMatrix::min_eigenvalue() const { return hermitian_eigenvalues(matrix_).front(); }

// ---------------------------------------------------------------------------

namespace {

void require_mode_count(int n, const Basis &basis, const char *what) {
    if (n < 1) {
        throw InputError(std::string(what) + ": n must be >= 1");
    }
    if (n > basis.n_modes()) {
        throw InputError(std::string(what) + ": basis too small (" + std::to_string(basis.n_modes()) + " modes, need " +
                         std::to_string(n) + ")");
    }
    if (n != basis.n_modes()) {
        throw InputError(std::string(what) + ": n must equal the basis mode count " + std::to_string(basis.n_modes()));
    }
}

}  // namespace

StateVector w_state(int n, BasisPtr basis) {
    if (!basis) {
        throw InputError("w_state requires a basis");
    }
    require_mode_count(n, *basis, "w_state");
    std::vector<cplx> amps(basis->dimension());
    const double weight = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        const auto k = basis->find(single_photon(n, i));
        if (!k) {
            throw InputError("w_state: basis too small, missing " + single_photon(n, i).label());
        }
        amps[*k] = weight;
    }
    return StateVector::normalized(std::move(basis), std::move(amps));
}

StateVector ghz_state(int n, BasisPtr basis) {
    if (!basis) {
        throw InputError("ghz_state requires a basis");
    }
    require_mode_count(n, *basis, "ghz_state");
    if (basis->excitation_cap() && *basis->excitation_cap() < n) {
        throw InputError("ghz_state: excitation cap " + std::to_string(*basis->excitation_cap()) + " is below n = " +
                         std::to_string(n));
    }
    std::vector<cplx> amps(basis->dimension());
    const double weight = 1.0 / std::sqrt(2.0);
    amps[basis->index_of(ground_vacuum(n))] = weight;
    amps[basis->index_of(ground_with_photons(std::vector<int>(static_cast<std::size_t>(n), 1)))] = weight;
    return StateVector::normalized(std::move(basis), std::move(amps));
}

double fidelity(const StateVector &psi, const StateVector &phi) {
    const double f = std::norm(inner_product(psi, phi));
    return std::clamp(f, 0.0, 1.0);
}

double success_probability(const StateVector &psi, int n) { return fidelity(w_state(n, psi.basis_ptr()), psi); }

double atom_ground_probability(const StateVector &psi) {
    double p = 0.0;
    const auto &states = psi.basis().states();
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].atom == AtomLevel::Ground) {
            p += std::norm(psi.amplitude(k));
        }
    }
    return std::clamp(p, 0.0, 1.0);
}

DensityMatrix partial_trace(const StateVector &psi, std::span<const int> keep) {
    const Basis &basis = psi.basis();
    const int n_subsystems = basis.n_modes() + 1;
    if (keep.empty()) {
        throw InputError("partial_trace: keep set is empty");
    }
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw InputError("partial_trace: duplicate subsystem index");
    }
    if (kept.front() < 0 || kept.back() >= n_subsystems) {
        throw InputError("partial_trace: subsystem index out of range [0, " + std::to_string(n_subsystems - 1) + "]");
    }

    std::vector<bool> is_kept(static_cast<std::size_t>(n_subsystems), false);
    for (int j : kept) {
        is_kept[static_cast<std::size_t>(j)] = true;
    }
    std::vector<int> dims;
    std::size_t reduced_dim = 1;
    for (int j : kept) {
        dims.push_back(j == kAtomSubsystem ? 2 : basis.n_max() + 1);
        reduced_dim *= static_cast<std::size_t>(dims.back());
    }

    // Group amplitudes by the configuration of the discarded subsystems; only
    // pairs sharing that configuration contribute to the reduced state.
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, cplx>>> groups;
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
        const cplx amp = psi.amplitude(k);
        if (amp == cplx{0.0, 0.0}) {
            continue;
        }
        const BasisState &s = basis.state(k);
        std::size_t reduced_index = 0;
        std::vector<int> discarded;
        for (int j = 0; j < n_subsystems; ++j) {
            const int value = j == kAtomSubsystem ? static_cast<int>(s.atom) : s.occupations[static_cast<std::size_t>(j - 1)];
            if (is_kept[static_cast<std::size_t>(j)]) {
                const int d = j == kAtomSubsystem ? 2 : basis.n_max() + 1;
                reduced_index = reduced_index * static_cast<std::size_t>(d) + static_cast<std::size_t>(value);
            } else {
                discarded.push_back(value);
            }
        }
        groups[discarded].emplace_back(reduced_index, amp);
    }

    ComplexMatrix rho(reduced_dim, reduced_dim);
    for (const auto &[key, members] : groups) {
        for (const auto &[row, a] : members) {
            for (const auto &[col, b] : members) {
                rho(row, col) += a * std::conj(b);
            }
        }
    }
    return DensityMatrix(std::move(kept), std::move(dims), std::move(rho));
}

namespace {

// Eigenvalues of rho below this are rounding noise for a unit-trace state.
constexpr double kRankCutoff = 1e-14;

ComplexMatrix spin_flip() {
    ComplexMatrix y(4, 4);
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

}  // namespace

double concurrence(const DensityMatrix &rho) {
    if (rho.dims() != std::vector<int>{2, 2}) {
        throw InputError("concurrence is defined here for two-qubit states only");
    }
    const HermitianEigen eig = hermitian_eigen(rho.matrix());

    // rho = A A^dagger with columns sqrt(mu_k) v_k over the numerical support.
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        if (eig.values[k] > kRankCutoff) {
            support.push_back(k);
        }
    }
    ComplexMatrix factor(4, support.size());
    for (std::size_t c = 0; c < support.size(); ++c) {
        const std::size_t k = support[c];
        const double w = std::sqrt(eig.values[k]);
        for (std::size_t i = 0; i < 4; ++i) {
            factor(i, c) = w * eig.vectors(k, i);
        }
    }
    ComplexMatrix factor_t(support.size(), 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t c = 0; c < support.size(); ++c) {
            factor_t(c, i) = factor(i, c);
        }
    }
    const ComplexMatrix tau = multiply(multiply(factor_t, spin_flip()), factor);

    std::vector<double> lambda = singular_values(tau);
    lambda.resize(4, 0.0);
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::clamp(c, 0.0, 1.0);
}

}  // namespace wcav
