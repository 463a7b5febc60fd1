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

// Complex double-precision level-1 kernels used by every inner loop in the
// library (inner products, matrix-vector and matrix-matrix products, the
// spectral propagator).
//
// Each kernel has a portable scalar reference implementation and, where the
// target supports it, an AVX2/FMA (x86-64) or NEON (aarch64) variant. The
// active table is chosen once per process from the CPU feature flags; setting
// WCAV_KERNELS=scalar|avx2|neon in the environment forces a backend (falling
// back to scalar when the requested one is unavailable).

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace wcav::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend backend);

struct KernelTable {
    Backend backend;
    /// sum_k conj(x[k]) * y[k]
    cplx (*dotc)(const cplx *x, const cplx *y, std::size_t n);
    /// sum_k x[k] * y[k]
    cplx (*dotu)(const cplx *x, const cplx *y, std::size_t n);
    /// sum_k |x[k]|^2
    double (*norm_sq)(const cplx *x, std::size_t n);
    /// y[k] += alpha * x[k]
    void (*axpy)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
    /// x[k] *= alpha
    void (*scale)(cplx alpha, cplx *x, std::size_t n);
};

/// The table selected for this process.
const KernelTable &active();

/// Table for a specific backend, or nullptr when it is not compiled in or
/// the running CPU lacks the required features.
const KernelTable *table_for(Backend backend);

/// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();

namespace scalar {
extern const KernelTable table;
}

// Convenience wrappers over the active table.

cplx dotc(std::span<const cplx> x, std::span<const cplx> y);
cplx dotu(std::span<const cplx> x, std::span<const cplx> y);
double norm_sq(std::span<const cplx> x);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
void scale(cplx alpha, std::span<cplx> x);

}  // namespace wcav::kernels
