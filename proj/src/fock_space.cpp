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

#include "wcav/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wcav/errors.hpp"
#include "wcav/kernels.hpp"

namespace wcav {

int BasisState::total_excitation() const {
    return (atom == AtomLevel::Excited ? 1 : 0) + std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::string BasisState::label() const {
    const bool wide = std::any_of(occupations.begin(), occupations.end(), [](int n) { return n > 9; });
    std::string out = atom == AtomLevel::Excited ? "|e," : "|g,";
    for (std::size_t i = 0; i < occupations.size(); ++i) {
        if (wide && i > 0) {
            out += ',';
        }
        out += std::to_string(occupations[i]);
    }
    out += '>';
    return out;
}

BasisState ground_with_photons(std::vector<int> occupations) {
    return {AtomLevel::Ground, std::move(occupations)};
}

BasisState excited_vacuum(int n_modes) {
    return {AtomLevel::Excited, std::vector<int>(static_cast<std::size_t>(n_modes), 0)};
}

BasisState ground_vacuum(int n_modes) {
    return {AtomLevel::Ground, std::vector<int>(static_cast<std::size_t>(n_modes), 0)};
}

BasisState single_photon(int n_modes, int mode) {
    BasisState s = ground_vacuum(n_modes);
    s.occupations.at(static_cast<std::size_t>(mode)) = 1;
    return s;
}

// ---------------------------------------------------------------------------

Basis::Basis(Truncation t, std::vector<BasisState> states) : truncation_(t), states_(std::move(states)) {
    for (std::size_t k = 0; k < states_.size(); ++k) {
        index_.emplace(states_[k], k);
    }
}

std::optional<std::size_t> Basis::find(const BasisState &s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t Basis::index_of(const BasisState &s) const {
    if (auto k = find(s)) {
        return *k;
    }
    throw InputError("state " + s.label() + " is outside the truncated basis");
}

namespace {

class Enumerator {
   public:
    Enumerator(int n_modes, int n_max, std::size_t limit, std::vector<BasisState> &out)
        : n_modes_(n_modes), n_max_(n_max), limit_(limit), out_(out) {}

    // Appends all occupation vectors for `atom` in lexicographic order with at
    // most `budget` photons in total.
    void run(AtomLevel atom, int budget) {
        current_.assign(static_cast<std::size_t>(n_modes_), 0);
        recurse(atom, 0, budget);
    }

   private:
    void recurse(AtomLevel atom, int mode, int budget) {
        if (mode == n_modes_) {
            if (out_.size() >= limit_) {
                throw InputError("truncation too large: basis dimension exceeds limit " + std::to_string(limit_));
            }
            out_.push_back({atom, current_});
            return;
        }
        const int top = std::min(n_max_, budget);
        for (int n = 0; n <= top; ++n) {
            current_[static_cast<std::size_t>(mode)] = n;
            recurse(atom, mode + 1, budget - n);
        }
        current_[static_cast<std::size_t>(mode)] = 0;
    }

    int n_modes_;
    int n_max_;
    std::size_t limit_;
    std::vector<BasisState> &out_;
    std::vector<int> current_;
};

}  // namespace

BasisPtr build_basis(int n_modes, int n_max, std::optional<int> excitation_cap, std::size_t dimension_limit) {
    if (n_modes < 1) {
        throw InputError("n_modes must be >= 1");
    }
    if (n_max < 1) {
        throw InputError("n_max must be >= 1");
    }
    if (excitation_cap && *excitation_cap < 0) {
        throw InputError("excitation_cap must be >= 0");
    }
    // Unbounded budget when uncapped; n_max already bounds each mode.
    const int unbounded = n_modes * n_max + 1;
    std::vector<BasisState> states;
    Enumerator enumerate(n_modes, n_max, dimension_limit, states);
    for (AtomLevel atom : {AtomLevel::Ground, AtomLevel::Excited}) {
        const int atom_cost = atom == AtomLevel::Excited ? 1 : 0;
        const int budget = excitation_cap ? *excitation_cap - atom_cost : unbounded;
        if (budget >= 0) {
            enumerate.run(atom, budget);
        }
    }
    if (states.empty()) {
        throw InputError("truncation admits no states");
    }
    return BasisPtr(new Basis(Truncation{n_modes, n_max, excitation_cap}, std::move(states)));
}

// ---------------------------------------------------------------------------

StateVector::StateVector(BasisPtr basis, std::vector<cplx> amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (!basis_) {
        throw InputError("state vector requires a basis");
    }
    if (amplitudes_.size() != basis_->dimension()) {
        throw InputError("amplitude count " + std::to_string(amplitudes_.size()) + " does not match basis dimension " +
                         std::to_string(basis_->dimension()));
    }
    const double n = norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
        throw NumericalError("state vector norm " + std::to_string(n) + " is not 1");
    }
}

StateVector StateVector::normalized(BasisPtr basis, std::vector<cplx> amplitudes) {
    const double n = std::sqrt(kernels::norm_sq(amplitudes));
    if (!std::isfinite(n) || n == 0.0) {
        throw NumericalError("cannot normalize a zero or non-finite vector");
    }
    kernels::scale(1.0 / n, amplitudes);
    return StateVector(std::move(basis), std::move(amplitudes));
}

StateVector StateVector::basis_state(BasisPtr basis, const BasisState &s) {
    if (!basis) {
        throw InputError("state vector requires a basis");
    }
    std::vector<cplx> amps(basis->dimension());
    amps[basis->index_of(s)] = 1.0;
    return StateVector(std::move(basis), std::move(amps));
}

cplx StateVector::amplitude(const BasisState &s) const {
    if (auto k = basis_->find(s)) {
        return amplitudes_[*k];
    }
    return 0.0;
}

double StateVector::norm() const { return std::sqrt(kernels::norm_sq(amplitudes_)); }

StateVector initial_state(BasisPtr basis) {
    if (!basis) {
        throw InputError("initial_state requires a basis");
    }
    const BasisState start = excited_vacuum(basis->n_modes());
    if (!basis->contains(start)) {
        throw InputError("basis excludes the excited-atom vacuum state " + start.label());
    }
    return StateVector::basis_state(std::move(basis), start);
}

cplx inner_product(const StateVector &a, const StateVector &b) {
    if (!a.basis().same_space(b.basis())) {
        throw InputError("inner product of states on different bases");
    }
    return kernels::dotc(a.amplitudes(), b.amplitudes());
}

}  // namespace wcav
