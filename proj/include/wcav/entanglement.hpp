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

// Target states (W, GHZ), overlaps, reduced density matrices and two-qubit
// concurrence.
//
// Subsystems are indexed 0 = atom, 1..N = cavity modes. The atom has local
// dimension 2 (g = 0, e = 1), a mode has local dimension n_max + 1.

#include <span>
#include <vector>

#include "wcav/fock_space.hpp"
#include "wcav/linalg.hpp"

namespace wcav {

inline constexpr int kAtomSubsystem = 0;

class DensityMatrix {
   public:
    static constexpr double kHermiticityTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;
    static constexpr double kEigenvalueFloor = -1e-10;

    /// `labels` are subsystem indices, `dims` their local dimensions; the
    /// matrix is ordered with the first label most significant. Throws
    /// NumericalError when the matrix is not Hermitian, unit trace and PSD
    /// within the tolerances above.
    DensityMatrix(std::vector<int> labels, std::vector<int> dims, ComplexMatrix matrix);

    const std::vector<int> &labels() const { return labels_; }
    const std::vector<int> &dims() const { return dims_; }
    const ComplexMatrix &matrix() const { return matrix_; }
    std::size_t dimension() const { return matrix_.rows(); }

    double purity() const;
    double min_eigenvalue() const;

   private:
    std::vector<int> labels_;
    std::vector<int> dims_;
    ComplexMatrix matrix_;
};

/// (|1,0..0> + ... + |0..0,1>)/sqrt(n) on the field, atom in |g>. Amplitudes
/// are real positive. `n` must equal basis->n_modes().
StateVector w_state(int n, BasisPtr basis);

/// (|0..0> + |1..1>)/sqrt(2) on the field, atom in |g>. Needs an excitation
/// cap of at least n (or none).
StateVector ghz_state(int n, BasisPtr basis);

/// |<psi|phi>|^2
double fidelity(const StateVector &psi, const StateVector &phi);

/// Probability of finding the atom in |g> and the field in W_n.
double success_probability(const StateVector &psi, int n);

/// Total probability of the atom being in |g>.
double atom_ground_probability(const StateVector &psi);

/// Reduced state on the subsystems in `keep` (indices are sorted; duplicates,
/// an empty set or out-of-range indices raise InputError).
DensityMatrix partial_trace(const StateVector &psi, std::span<const int> keep);

inline DensityMatrix partial_trace(const StateVector &psi, std::initializer_list<int> keep) {
    return partial_trace(psi, std::span<const int>(keep.begin(), keep.size()));
}

/// Wootters concurrence of a two-qubit state. The spin-flip eigenvalues are
/// taken as singular values of tau = A^T (sy x sy) A for rho = A A^dagger,
/// which keeps O(machine epsilon) accuracy on rank-deficient states.
double concurrence(const DensityMatrix &rho);

}  // namespace wcav
