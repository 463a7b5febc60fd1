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

// Truncated Hilbert space of one two-level atom coupled to N bosonic modes.
//
// A basis state is labelled by the atom level and the photon count of each
// mode. Bases are ordered lexicographically on (atom, n_1, ..., n_N) with
// Ground < Excited, so the same truncation always yields the same matrices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wcav/linalg.hpp"

namespace wcav {

enum class AtomLevel : std::uint8_t { Ground = 0, Excited = 1 };

struct BasisState {
    AtomLevel atom = AtomLevel::Ground;
    std::vector<int> occupations;

    /// Atomic excitation plus total photon number.
    int total_excitation() const;

    /// Ket label such as "|e,000>" (occupations are comma separated when any
    /// exceeds 9).
    std::string label() const;

    auto operator<=>(const BasisState &) const = default;
    bool operator==(const BasisState &) const = default;
};

BasisState ground_with_photons(std::vector<int> occupations);
BasisState excited_vacuum(int n_modes);
BasisState ground_vacuum(int n_modes);
/// |g, 0..1..0> with the photon in mode `mode` (0-based).
BasisState single_photon(int n_modes, int mode);

inline constexpr std::size_t kDefaultDimensionLimit = 16384;

struct Truncation {
    int n_modes = 1;
    int n_max = 1;
    std::optional<int> excitation_cap = 1;

    bool operator==(const Truncation &) const = default;
};

class Basis;
using BasisPtr = std::shared_ptr<const Basis>;

class Basis {
   public:
    int n_modes() const { return truncation_.n_modes; }
    int n_max() const { return truncation_.n_max; }
    std::optional<int> excitation_cap() const { return truncation_.excitation_cap; }
    const Truncation &truncation() const { return truncation_; }

    std::size_t dimension() const { return states_.size(); }
    const std::vector<BasisState> &states() const { return states_; }
    const BasisState &state(std::size_t k) const { return states_.at(k); }

    std::optional<std::size_t> find(const BasisState &s) const;
    /// Throws InputError when `s` lies outside the truncation.
    std::size_t index_of(const BasisState &s) const;
    bool contains(const BasisState &s) const { return find(s).has_value(); }

    /// Same truncation parameters, hence the same ordered state list.
    bool same_space(const Basis &other) const { return truncation_ == other.truncation_; }

   private:
    friend BasisPtr build_basis(int, int, std::optional<int>, std::size_t);
    Basis(Truncation t, std::vector<BasisState> states);

    Truncation truncation_;
    std::vector<BasisState> states_;
    std::map<BasisState, std::size_t> index_;
};

/// Enumerates every (atom, occupations) pair with 0 <= n_i <= n_max and, when
/// `excitation_cap` is set, total excitation <= cap. Throws InputError for
/// n_modes < 1, n_max < 1, a negative cap, or a dimension above
/// `dimension_limit` ("truncation too large").
BasisPtr build_basis(int n_modes, int n_max = 1, std::optional<int> excitation_cap = 1,
                     std::size_t dimension_limit = kDefaultDimensionLimit);

inline BasisPtr build_basis(const Truncation &t, std::size_t dimension_limit = kDefaultDimensionLimit) {
    return build_basis(t.n_modes, t.n_max, t.excitation_cap, dimension_limit);
}

/// Normalized complex amplitudes over a basis.
class StateVector {
   public:
    static constexpr double kNormTolerance = 1e-12;

    /// Takes the amplitudes as given; throws NumericalError unless the norm
    /// is 1 within kNormTolerance.
    StateVector(BasisPtr basis, std::vector<cplx> amplitudes);

    /// Rescales to unit norm. Throws NumericalError on a zero or non-finite
    /// vector.
    static StateVector normalized(BasisPtr basis, std::vector<cplx> amplitudes);

    static StateVector basis_state(BasisPtr basis, const BasisState &s);

    const BasisPtr &basis_ptr() const { return basis_; }
    const Basis &basis() const { return *basis_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    cplx amplitude(std::size_t k) const { return amplitudes_.at(k); }
    /// Zero when `s` is outside the truncation.
    cplx amplitude(const BasisState &s) const;

    double norm() const;

   private:
    BasisPtr basis_;
    std::vector<cplx> amplitudes_;
};

/// |e, 0...0>: the atom excited, every cavity in vacuum.
StateVector initial_state(BasisPtr basis);

/// <a|b>, conjugate-linear in `a`.
cplx inner_product(const StateVector &a, const StateVector &b);

}  // namespace wcav
