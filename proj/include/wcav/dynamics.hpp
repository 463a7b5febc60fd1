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

// Atom-multimode Hamiltonian, closed-form single-excitation evolution, and a
// dense spectral propagator that serves as the independent numerical check.
//
// Units: hbar = 1. Frequencies and couplings are angular (rad per unit time).
//
//   Lab frame:         H = w0 s_z + sum_i w_i a_i^+ a_i + sum_i e_i (a_i s_+ + a_i^+ s_-)
//   Interaction frame: H = sum_i (w_i - w0) a_i^+ a_i + sum_i e_i (a_i s_+ + a_i^+ s_-)
//
// The interaction frame rotates every excitation at w0; for resonant modes
// only the coupling term survives.

#include <vector>

#include "wcav/fock_space.hpp"
#include "wcav/linalg.hpp"

namespace wcav {

enum class Frame { Lab, Interaction };

struct ModelParams {
    int n_modes = 1;
    double omega_atom = 0.0;
    std::vector<double> omega_modes;
    std::vector<double> couplings;
    Frame frame = Frame::Interaction;

    /// N identical modes at frequency `omega`, all coupled with `epsilon`.
    static ModelParams resonant(int n_modes, double epsilon, Frame frame = Frame::Interaction, double omega = 0.0);

    /// Throws InputError on length mismatches, non-positive couplings or
    /// non-finite values.
    void validate() const;

    /// Every w_i equals w0 (relative 1e-12).
    bool is_resonant() const;
    /// Resonant and every e_i equal (relative 1e-12).
    bool is_resonant_identical() const;
};

class HermitianOperator {
   public:
    static constexpr double kHermiticityTolerance = 1e-12;

    /// Throws NumericalError when `matrix` is not Hermitian within
    /// kHermiticityTolerance, InputError on a dimension mismatch.
    HermitianOperator(BasisPtr basis, ComplexMatrix matrix);

    const Basis &basis() const { return *basis_; }
    const BasisPtr &basis_ptr() const { return basis_; }
    const ComplexMatrix &matrix() const { return matrix_; }
    std::size_t dimension() const { return matrix_.rows(); }

   private:
    BasisPtr basis_;
    ComplexMatrix matrix_;
};

enum class HamiltonianFault {
    None,
    /// Negates one coupling matrix element without touching its transpose.
    FlipOneCouplingSign,
};

/// Raw matrix assembly with no Hermiticity check. Bosonic matrix elements
/// carry sqrt(n) factors; transitions leaving the truncation are dropped.
ComplexMatrix assemble_hamiltonian(const ModelParams &params, const Basis &basis,
                                   HamiltonianFault fault = HamiltonianFault::None);

HermitianOperator build_hamiltonian(const ModelParams &params, BasisPtr basis);

/// Diagonal excitation number |e><e| + sum_i a_i^+ a_i.
HermitianOperator excitation_operator(BasisPtr basis);

/// max_ij |(AB - BA)_ij|
double commutator_norm(const ComplexMatrix &a, const ComplexMatrix &b);

/// Single-excitation basis (n_max = 1, cap = 1) for N modes.
BasisPtr default_basis(int n_modes);

/// cos(sqrt(N) e t) |e,0..0>  - i sin(sqrt(N) e t)/sqrt(N) sum_i |g,1_i>
/// Requires resonant identical couplings in the interaction frame.
StateVector evolve_closed_form(const ModelParams &params, double t);
StateVector evolve_closed_form(const ModelParams &params, double t, BasisPtr basis);

/// Resonant couplings of arbitrary strength, W = sqrt(sum e_i^2):
/// cos(W t) |e,0..0>  - i (e_i / W) sin(W t) |g,1_i>
StateVector evolve_closed_form_general(const ModelParams &params, double t);
StateVector evolve_closed_form_general(const ModelParams &params, double t, BasisPtr basis);

/// exp(-iHt) via the eigendecomposition H = V diag(l) V^dagger, computed once
/// and reused for every time. Results whose norm drifts by more than
/// kNormDriftTolerance raise NumericalError; smaller drift is renormalized.
class SpectralPropagator {
   public:
    static constexpr double kNormDriftTolerance = 1e-10;

    explicit SpectralPropagator(const HermitianOperator &hamiltonian);

    StateVector apply(const StateVector &psi0, double t) const;

    /// exp(-iHt) x without the drift check or renormalization.
    std::vector<cplx> apply_raw(std::span<const cplx> x, double t) const;

    const HermitianEigen &spectrum() const { return spectrum_; }

   private:
    BasisPtr basis_;
    HermitianEigen spectrum_;
};

StateVector propagate_numeric(const HermitianOperator &hamiltonian, const StateVector &psi0, double t);

}  // namespace wcav
