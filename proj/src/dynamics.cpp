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

#include "wcav/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wcav/errors.hpp"
#include "wcav/kernels.hpp"

namespace wcav {

namespace {

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

ModelParams ModelParams::resonant(int n_modes, double epsilon, Frame frame, double omega) {
    if (n_modes < 1) {
        throw InputError("n_modes must be >= 1");
    }
    ModelParams p;
    p.n_modes = n_modes;
    p.omega_atom = omega;
    p.omega_modes.assign(static_cast<std::size_t>(n_modes), omega);
    p.couplings.assign(static_cast<std::size_t>(n_modes), epsilon);
    p.frame = frame;
    p.validate();
    return p;
}

void ModelParams::validate() const {
    if (n_modes < 1) {
        throw InputError("n_modes must be >= 1");
    }
    const auto n = static_cast<std::size_t>(n_modes);
    if (omega_modes.size() != n || couplings.size() != n) {
        throw InputError("omega_modes and couplings must each have n_modes entries");
    }
    if (!std::isfinite(omega_atom)) {
        throw InputError("omega_atom must be finite");
    }
    for (double w : omega_modes) {
        if (!std::isfinite(w)) {
            throw InputError("mode frequencies must be finite");
        }
    }
    for (double e : couplings) {
        if (!std::isfinite(e) || e <= 0.0) {
            throw InputError("couplings must be finite and > 0");
        }
    }
}

bool ModelParams::is_resonant() const {
    return std::all_of(omega_modes.begin(), omega_modes.end(), [&](double w) { return nearly_equal(w, omega_atom); });
}

bool ModelParams::is_resonant_identical() const {
    if (!is_resonant() || couplings.empty()) {
        return false;
    }
    return std::all_of(couplings.begin(), couplings.end(), [&](double e) { return nearly_equal(e, couplings.front()); });
}

// ---------------------------------------------------------------------------

HermitianOperator::HermitianOperator(BasisPtr basis, ComplexMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    if (!basis_ || !matrix_.is_square() || matrix_.rows() != basis_->dimension()) {
        throw InputError("operator dimension does not match basis");
    }
    const double err = hermiticity_error(matrix_);
    if (!(err <= kHermiticityTolerance)) {
        throw NumericalError("operator is not Hermitian (max |H - H^dagger| = " + std::to_string(err) + ")");
    }
}

ComplexMatrix assemble_hamiltonian(const ModelParams &params, const Basis &basis, HamiltonianFault fault) {
    params.validate();
    if (params.n_modes != basis.n_modes()) {
        throw InputError("ModelParams has " + std::to_string(params.n_modes) + " modes but basis has " +
                         std::to_string(basis.n_modes()));
    }
    const std::size_t dim = basis.dimension();
    ComplexMatrix h(dim, dim);
    bool fault_pending = fault == HamiltonianFault::FlipOneCouplingSign;

    for (std::size_t col = 0; col < dim; ++col) {
        const BasisState &s = basis.state(col);
        const bool excited = s.atom == AtomLevel::Excited;

        double diag = 0.0;
        if (params.frame == Frame::Lab) {
            diag += (excited ? 0.5 : -0.5) * params.omega_atom;
        }
        for (std::size_t i = 0; i < s.occupations.size(); ++i) {
            const double w = params.frame == Frame::Lab ? params.omega_modes[i] : params.omega_modes[i] - params.omega_atom;
            diag += w * s.occupations[i];
        }
        h(col, col) = diag;

        if (excited) {
            continue;
        }
        // a_i s_+ |g, n> = sqrt(n_i) |e, n - 1_i>; the a_i^+ s_- term is its
        // Hermitian conjugate and fills the mirrored element.
        for (std::size_t i = 0; i < s.occupations.size(); ++i) {
            const int n_i = s.occupations[i];
            if (n_i == 0) {
                continue;
            }
            BasisState target{AtomLevel::Excited, s.occupations};
            target.occupations[i] -= 1;
            const auto row = basis.find(target);
            if (!row) {
                continue;
            }
            const double element = params.couplings[i] * std::sqrt(static_cast<double>(n_i));
            h(*row, col) = element;
            h(col, *row) = fault_pending ? -element : element;
            fault_pending = false;
        }
    }
    return h;
}

HermitianOperator build_hamiltonian(const ModelParams &params, BasisPtr basis) {
    if (!basis) {
        throw InputError("build_hamiltonian requires a basis");
    }
    ComplexMatrix h = assemble_hamiltonian(params, *basis);
    return HermitianOperator(std::move(basis), std::move(h));
}

HermitianOperator excitation_operator(BasisPtr basis) {
    if (!basis) {
        throw InputError("excitation_operator requires a basis");
    }
    ComplexMatrix m(basis->dimension(), basis->dimension());
    for (std::size_t k = 0; k < basis->dimension(); ++k) {
        m(k, k) = static_cast<double>(basis->state(k).total_excitation());
    }
    return HermitianOperator(std::move(basis), std::move(m));
}

double commutator_norm(const ComplexMatrix &a, const ComplexMatrix &b) {
    return max_abs(subtract(multiply(a, b), multiply(b, a)));
}

BasisPtr default_basis(int n_modes) { return build_basis(n_modes, 1, 1); }

// ---------------------------------------------------------------------------

namespace {

// Places cos(W t) on |e,0..0> and -i (e_i/W) sin(W t) on each |g,1_i>.
StateVector single_excitation_rabi(const ModelParams &params, double t, BasisPtr basis) {
    if (!basis) {
        throw InputError("closed-form evolution requires a basis");
    }
    if (params.n_modes != basis->n_modes()) {
        throw InputError("ModelParams and basis disagree on the number of modes");
    }
    if (!std::isfinite(t)) {
        throw InputError("time must be finite");
    }
    const int n = params.n_modes;
    const double sum_sq =
        std::accumulate(params.couplings.begin(), params.couplings.end(), 0.0, [](double acc, double e) { return acc + e * e; });
    const double omega = std::sqrt(sum_sq);
    const double phase = omega * t;

    std::vector<cplx> amps(basis->dimension());
    amps[basis->index_of(excited_vacuum(n))] = std::cos(phase);
    const double s = std::sin(phase);
    for (int i = 0; i < n; ++i) {
        const double weight = params.couplings[static_cast<std::size_t>(i)] / omega;
        amps[basis->index_of(single_photon(n, i))] = cplx(0.0, -weight * s);
    }
    return StateVector::normalized(std::move(basis), std::move(amps));
}

void require_interaction_frame(const ModelParams &params) {
    if (params.frame != Frame::Interaction) {
        throw InputError("closed-form evolution is written in the interaction frame");
    }
}

}  // namespace

StateVector evolve_closed_form(const ModelParams &params, double t) {
    return evolve_closed_form(params, t, default_basis(params.n_modes));
}

StateVector evolve_closed_form(const ModelParams &params, double t, BasisPtr basis) {
    params.validate();
    require_interaction_frame(params);
    if (!params.is_resonant_identical()) {
        throw InputError("evolve_closed_form needs resonant, identical couplings; use evolve_closed_form_general "
                         "or the numeric propagator");
    }
    return single_excitation_rabi(params, t, std::move(basis));
}

StateVector evolve_closed_form_general(const ModelParams &params, double t) {
    return evolve_closed_form_general(params, t, default_basis(params.n_modes));
}

StateVector evolve_closed_form_general(const ModelParams &params, double t, BasisPtr basis) {
    params.validate();
    require_interaction_frame(params);
    if (!params.is_resonant()) {
        throw InputError("evolve_closed_form_general needs resonant modes; detuned dynamics are numeric only");
    }
    return single_excitation_rabi(params, t, std::move(basis));
}

// ---------------------------------------------------------------------------

SpectralPropagator::SpectralPropagator(const HermitianOperator &hamiltonian)
    : basis_(hamiltonian.basis_ptr()), spectrum_(hermitian_eigen(hamiltonian.matrix())) {}

std::vector<cplx> SpectralPropagator::apply_raw(std::span<const cplx> x, double t) const {
    const std::size_t dim = spectrum_.values.size();
    if (x.size() != dim) {
        throw InputError("vector length does not match the Hamiltonian dimension");
    }
    std::vector<cplx> out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const std::span<const cplx> v = spectrum_.vectors.row(k);
        const cplx coeff = kernels::dotc(v, x);
        const double angle = -spectrum_.values[k] * t;
        kernels::axpy(coeff * cplx(std::cos(angle), std::sin(angle)), v, out);
    }
    return out;
}

StateVector SpectralPropagator::apply(const StateVector &psi0, double t) const {
    if (!psi0.basis().same_space(*basis_)) {
        throw InputError("state and Hamiltonian live on different bases");
    }
    if (!std::isfinite(t)) {
        throw InputError("time must be finite");
    }
    if (t == 0.0) {
        // U(0) is exactly the identity; skip the round trip through the eigenbasis.
        return psi0;
    }
    std::vector<cplx> out = apply_raw(psi0.amplitudes(), t);
    const double norm = std::sqrt(kernels::norm_sq(out));
    if (!std::isfinite(norm)) {
        throw NumericalError("propagated state contains NaN/Inf (parameter overflow?)");
    }
    if (std::abs(norm - 1.0) > kNormDriftTolerance) {
        throw NumericalError("propagator norm drift " + std::to_string(std::abs(norm - 1.0)) + " exceeds 1e-10");
    }
    return StateVector::normalized(psi0.basis_ptr(), std::move(out));
}

StateVector propagate_numeric(const HermitianOperator &hamiltonian, const StateVector &psi0, double t) {
    return SpectralPropagator(hamiltonian).apply(psi0, t);
}

}  // namespace wcav
