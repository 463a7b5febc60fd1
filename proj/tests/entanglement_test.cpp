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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wcav/dynamics.hpp"
#include "wcav/errors.hpp"

namespace wcav {
namespace {

using std::numbers::pi;

StateVector random_state(const BasisPtr &basis, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> amps(basis->dimension());
    for (cplx &a : amps) {
        a = {normal(rng), normal(rng)};
    }
    return StateVector::normalized(basis, std::move(amps));
}

std::vector<cplx> amplitudes(const StateVector &psi) { return {psi.amplitudes().begin(), psi.amplitudes().end()}; }

oracle::Dense dense(const ComplexMatrix &m) {
    oracle::Dense d = oracle::zeros(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            d[i][j] = m(i, j);
        }
    }
    return d;
}

double max_diff(const ComplexMatrix &a, const oracle::Dense &b) {
    double g = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            g = std::max(g, std::abs(a(i, j) - b[i][j]));
        }
    }
    return g;
}

DensityMatrix two_qubit(const std::vector<cplx> &v) {
    ComplexMatrix m(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return DensityMatrix({1, 2}, {2, 2}, m);
}

ComplexMatrix random_su2(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    const double a = u(rng), b = u(rng), c = u(rng);
    ComplexMatrix m(2, 2);
    m(0, 0) = std::polar(std::cos(a), b);
    m(0, 1) = std::polar(std::sin(a), c);
    m(1, 0) = -std::polar(std::sin(a), -c);
    m(1, 1) = std::polar(std::cos(a), -b);
    return m;
}

DensityMatrix rotate(const DensityMatrix &rho, const ComplexMatrix &ua, const ComplexMatrix &ub) {
    const ComplexMatrix u = kron(ua, ub);
    return DensityMatrix(rho.labels(), rho.dims(), multiply(multiply(u, rho.matrix()), adjoint(u)));
}

TEST(WState, amplitudes_and_validation) {
    const StateVector w = w_state(3, build_basis(3));
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(w.amplitude(single_photon(3, i)).real(), 1 / std::sqrt(3.0), 1e-16);
    }
    EXPECT_EQ(w.amplitude(excited_vacuum(3)), cplx(0.0));
    EXPECT_EQ(w_state(1, build_basis(1)).amplitude(single_photon(1, 0)), cplx(1.0));
    EXPECT_THROW(w_state(2, build_basis(3)), InputError);
}

TEST(GhzState, amplitudes_and_cap_requirement) {
    const StateVector ghz = ghz_state(3, build_basis(3, 1, std::nullopt));
    EXPECT_NEAR(ghz.amplitude(ground_vacuum(3)).real(), std::sqrt(0.5), 1e-16);
    EXPECT_NEAR(ghz.amplitude(BasisState{AtomLevel::Ground, {1, 1, 1}}).real(), std::sqrt(0.5), 1e-16);
    const StateVector bell = ghz_state(2, build_basis(2, 1, 2));
    EXPECT_NEAR(bell.amplitude(BasisState{AtomLevel::Ground, {1, 1}}).real(), std::sqrt(0.5), 1e-16);
    EXPECT_THROW(ghz_state(3, build_basis(3)), InputError);
}

TEST(Fidelity, basic_values) {
    const BasisPtr b = build_basis(3);
    const StateVector w = w_state(3, b);
    EXPECT_NEAR(fidelity(w, w), 1.0, 1e-15);
    EXPECT_EQ(fidelity(initial_state(b), w), 0.0);
    std::vector<cplx> phi(5);
    phi[b->index_of(single_photon(3, 0))] = std::sqrt(0.5);
    phi[b->index_of(single_photon(3, 1))] = std::sqrt(0.5);
    EXPECT_NEAR(fidelity(w, StateVector(b, phi)), 2.0 / 3.0, 1e-15);
}

TEST(SuccessProbability, along_the_rabi_cycle) {
    for (int n = 1; n <= 8; ++n) {
        const double eps = 0.6;
        const ModelParams p = ModelParams::resonant(n, eps);
        const double t_star = pi / (2 * std::sqrt(static_cast<double>(n)) * eps);
        EXPECT_NEAR(success_probability(evolve_closed_form(p, t_star), n), 1.0, 1e-12);
        EXPECT_EQ(success_probability(initial_state(default_basis(n)), n), 0.0);
        const BasisPtr b = default_basis(n);
        const StateVector half = propagate_numeric(build_hamiltonian(p, b), initial_state(b), t_star / 2);
        EXPECT_NEAR(success_probability(half, n), 0.5, 1e-12);
        EXPECT_NEAR(atom_ground_probability(half), 0.5, 1e-12);
    }
}

TEST(PartialTrace, product_state_keeps_pure_photon) {
    const BasisPtr b = build_basis(2);
    const DensityMatrix rho = partial_trace(StateVector::basis_state(b, single_photon(2, 0)), {1});
    EXPECT_EQ(rho.dims(), std::vector<int>{2});
    EXPECT_NEAR(rho.matrix()(1, 1).real(), 1.0, 1e-16);
    EXPECT_EQ(rho.matrix()(0, 0), cplx(0.0));
    EXPECT_NEAR(rho.purity(), 1.0, 1e-15);
}

TEST(PartialTrace, w_pair_matches_hand_result) {
    const StateVector w = w_state(3, build_basis(3));
    const DensityMatrix rho = partial_trace(w, {1, 2});
    // (1/3)|00><00| + (2/3)|Psi+><Psi+|.
    oracle::Dense expected = oracle::zeros(4);
    expected[0][0] = 1.0 / 3;
    expected[1][1] = expected[1][2] = expected[2][1] = expected[2][2] = 1.0 / 3;
    EXPECT_LE(max_diff(rho.matrix(), expected), 1e-15);
}

TEST(PartialTrace, ghz_pair_is_classical_mixture) {
    const StateVector ghz = ghz_state(3, build_basis(3, 1, std::nullopt));
    const DensityMatrix rho = partial_trace(ghz, {1, 2});
    oracle::Dense expected = oracle::zeros(4);
    expected[0][0] = expected[3][3] = 0.5;
    EXPECT_LE(max_diff(rho.matrix(), expected), 1e-15);
}

TEST(PartialTrace, matches_brute_force_oracle_on_random_states) {
    std::mt19937_64 rng(31);
    const std::vector<std::vector<int>> keeps{{0}, {1}, {2, 3}, {0, 3}, {1, 2, 4}, {3, 1}, {0, 1, 2, 3}};
    for (int trial = 0; trial < 20; ++trial) {
        const BasisPtr b = build_basis(4, 1, trial % 2 ? std::nullopt : std::optional<int>(2));
        const StateVector psi = random_state(b, rng);
        for (const std::vector<int> &keep : keeps) {
            const DensityMatrix rho = partial_trace(psi, keep);
            const oracle::Dense ref = oracle::brute_partial_trace(*b, amplitudes(psi), keep);
            EXPECT_LE(max_diff(rho.matrix(), ref), 1e-14);
            EXPECT_NEAR(trace(rho.matrix()).real(), 1.0, 1e-12);
            EXPECT_GE(rho.min_eigenvalue(), -1e-10);
            EXPECT_LE(hermiticity_error(rho.matrix()), 1e-12);
        }
    }
}

TEST(PartialTrace, product_across_cut_gives_pure_reduction) {
    // (a|00> + b|11>) on modes 1,2 times |1> on mode 3 times |g>.
    const BasisPtr b = build_basis(3, 1, std::nullopt);
    std::vector<cplx> amps(b->dimension());
    amps[b->index_of(BasisState{AtomLevel::Ground, {0, 0, 1}})] = cplx(0.6, 0.0);
    amps[b->index_of(BasisState{AtomLevel::Ground, {1, 1, 1}})] = cplx(0.0, 0.8);
    const StateVector psi(b, amps);
    EXPECT_NEAR(partial_trace(psi, {1, 2}).purity(), 1.0, 1e-10);
    EXPECT_NEAR(partial_trace(psi, {0, 3}).purity(), 1.0, 1e-10);
    EXPECT_NEAR(partial_trace(psi, {1}).purity(), 0.36 * 0.36 + 0.64 * 0.64, 1e-12);
}

TEST(PartialTrace, rejects_bad_keep_sets) {
    const StateVector w = w_state(3, build_basis(3));
    EXPECT_THROW(partial_trace(w, std::span<const int>()), InputError);
    EXPECT_THROW(partial_trace(w, {1, 1}), InputError);
    EXPECT_THROW(partial_trace(w, {4}), InputError);
    EXPECT_THROW(partial_trace(w, {-1}), InputError);
}

TEST(Concurrence, bell_and_product) {
    const double r = std::sqrt(0.5);
    EXPECT_NEAR(concurrence(two_qubit({r, 0, 0, r})), 1.0, 1e-12);
    EXPECT_NEAR(concurrence(two_qubit({0, r, r, 0})), 1.0, 1e-12);
    EXPECT_NEAR(concurrence(two_qubit({0, 1, 0, 0})), 0.0, 1e-12);
}

TEST(Concurrence, w_and_ghz_pairs) {
    const BasisPtr b = build_basis(3, 1, std::nullopt);
    EXPECT_NEAR(concurrence(partial_trace(w_state(3, b), {1, 2})), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(concurrence(partial_trace(ghz_state(3, b), {1, 2})), 0.0, 1e-12);
    for (int n = 3; n <= 8; ++n) {
        const BasisPtr bn = build_basis(n, 1, std::nullopt);
        const StateVector w = w_state(n, bn);
        const StateVector ghz = ghz_state(n, bn);
        for (int a = 1; a <= n; ++a) {
            for (int c = a + 1; c <= n; ++c) {
                EXPECT_NEAR(concurrence(partial_trace(w, {a, c})), 2.0 / n, 1e-9);
                EXPECT_LE(concurrence(partial_trace(ghz, {a, c})), 1e-12);
            }
        }
    }
}

TEST(Concurrence, pure_states_match_overlap_formula) {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<cplx> v(4);
        double nn = 0.0;
        for (cplx &x : v) {
            x = {normal(rng), normal(rng)};
            nn += std::norm(x);
        }
        for (cplx &x : v) {
            x /= std::sqrt(nn);
        }
        EXPECT_NEAR(concurrence(two_qubit(v)), oracle::pure_concurrence(v), 1e-12);
    }
}

// Mixed two-qubit states from random pure states of a larger system, scored
// against the eigenvalues of rho (YxY) rho* (YxY).
TEST(Concurrence, mixed_states_match_eigenvalue_route) {
    std::mt19937_64 rng(43);
    double worst = 0.0;
    int entangled = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const BasisPtr b = build_basis(3, 1, std::nullopt);
        const StateVector psi = random_state(b, rng);
        const DensityMatrix rho = partial_trace(psi, {1, 2});
        const double c = concurrence(rho);
        entangled += c > 0.05 ? 1 : 0;
        worst = std::max(worst, std::abs(c - oracle::wootters_concurrence(dense(rho.matrix()))));
    }
    EXPECT_LE(worst, 1e-7);
    EXPECT_GT(entangled, 0);
}

TEST(Concurrence, invariant_under_local_unitaries) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        const BasisPtr b = build_basis(3, 1, std::nullopt);
        const DensityMatrix rho =
            trial % 2 ? partial_trace(random_state(b, rng), {2, 3}) : partial_trace(w_state(3, b), {1, 3});
        const DensityMatrix turned = rotate(rho, random_su2(rng), random_su2(rng));
        EXPECT_NEAR(concurrence(turned), concurrence(rho), 1e-9);
    }
}

TEST(Concurrence, rejects_non_two_qubit) {
    const StateVector w = w_state(3, build_basis(3));
    EXPECT_THROW(concurrence(partial_trace(w, {1, 2, 3})), InputError);
    EXPECT_THROW(concurrence(partial_trace(w, {1})), InputError);
}

TEST(DensityMatrix, rejects_non_physical_input) {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix({1}, {2}, m), NumericalError);
    m(0, 0) = 0.5;
    m(1, 1) = 0.6;
    EXPECT_THROW(DensityMatrix({1}, {2}, m), NumericalError);
    m(1, 1) = 0.5;
    m(0, 1) = cplx(0, 0.1);
    EXPECT_THROW(DensityMatrix({1}, {2}, m), NumericalError);
    EXPECT_THROW(DensityMatrix({1, 2}, {2, 2}, ComplexMatrix::identity(2)), InputError);
}

}  // namespace
}  // namespace wcav
