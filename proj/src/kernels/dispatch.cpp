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

#include <cassert>
#include <cstdlib>
#include <string>

#include "wcav/kernels.hpp"

namespace wcav::kernels {

#if defined(WCAV_HAVE_AVX2_KERNELS)
namespace avx2 {
extern const KernelTable table;
}
#endif
#if defined(WCAV_HAVE_NEON_KERNELS)
namespace neon {
extern const KernelTable table;
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(WCAV_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &select_table() {
    const char *forced = std::getenv("WCAV_KERNELS");
    if (forced != nullptr) {
        const std::string name(forced);
        if (name == "scalar") {
            return scalar::table;
        }
        if (name == "avx2" && table_for(Backend::Avx2) != nullptr) {
            return *table_for(Backend::Avx2);
        }
        if (name == "neon" && table_for(Backend::Neon) != nullptr) {
            return *table_for(Backend::Neon);
        }
        if (name != "auto") {
            return scalar::table;
        }
    }
    if (const KernelTable *t = table_for(Backend::Avx2)) {
        return *t;
    }
    if (const KernelTable *t = table_for(Backend::Neon)) {
        return *t;
    }
    return scalar::table;
}

}  // namespace

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
        case Backend::Neon:
            return "neon";
    }
    return "unknown";
}

const KernelTable *table_for(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            return &scalar::table;
        case Backend::Avx2:
#if defined(WCAV_HAVE_AVX2_KERNELS)
            if (cpu_has_avx2()) {
                return &avx2::table;
            }
#endif
            return nullptr;
        case Backend::Neon:
#if defined(WCAV_HAVE_NEON_KERNELS)
            return &neon::table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
        if (table_for(b) != nullptr) {
            out.push_back(b);
        }
    }
    return out;
}

const KernelTable &active() {
    static const KernelTable &selected = select_table();
    return selected;
}

cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
    assert(x.size() == y.size());
    return active().dotc(x.data(), y.data(), x.size());
}

cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
    assert(x.size() == y.size());
    return active().dotu(x.data(), y.data(), x.size());
}

double norm_sq(std::span<const cplx> x) { return active().norm_sq(x.data(), x.size()); }

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    assert(x.size() == y.size());
    active().axpy(alpha, x.data(), y.data(), x.size());
}

void scale(cplx alpha, std::span<cplx> x) { active().scale(alpha, x.data(), x.size()); }

}  // namespace wcav::kernels
