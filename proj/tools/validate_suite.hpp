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

#include <cstdint>
#include <string>
#include <vector>

#include "wcav/dynamics.hpp"

namespace wcav::cli {

struct CheckResult {
    std::string name;
    /// Worst observed error for the property.
    double measured;
    double tolerance;
    bool passed;
    std::string detail;
};

/// Randomized invariant suite: Hermiticity, excitation conservation,
/// unitarity, propagator composition, closed-form vs numeric agreement,
/// Rabi period, W/GHZ pair concurrence, timing-error law, frame equivalence
/// and SIMD/scalar kernel agreement. `fault` is threaded into the Hermiticity
/// check only.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed, HamiltonianFault fault = HamiltonianFault::None);

}  // namespace wcav::cli
