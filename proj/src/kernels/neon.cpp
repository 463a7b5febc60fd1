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

// NEON kernels for aarch64, where Advanced SIMD is architecturally
// guaranteed. One float64x2_t holds a single complex value [re, im].

#include <arm_neon.h>

#include "wcav/kernels.hpp"

namespace wcav::kernels::neon {
namespace {

inline float64x2_t load(const cplx *p) { return vld1q_f64(reinterpret_cast<const double *>(p)); }
inline void store(cplx *p, float64x2_t v) { vst1q_f64(reinterpret_cast<double *>(p), v); }
inline float64x2_t swap_pair(float64x2_t v) { return vextq_f64(v, v, 1); }

void accumulate_products(const cplx *x, const cplx *y, std::size_t n, float64x2_t &straight,
                         float64x2_t &swapped) {
    float64x2_t s0 = vdupq_n_f64(0.0), s1 = vdupq_n_f64(0.0);
    float64x2_t w0 = vdupq_n_f64(0.0), w1 = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const float64x2_t x0 = load(x + k), x1 = load(x + k + 1);
        const float64x2_t y0 = load(y + k), y1 = load(y + k + 1);
        s0 = vfmaq_f64(s0, x0, y0);
        s1 = vfmaq_f64(s1, x1, y1);
        w0 = vfmaq_f64(w0, x0, swap_pair(y0));
        w1 = vfmaq_f64(w1, x1, swap_pair(y1));
    }
    if (k < n) {
        const float64x2_t x0 = load(x + k), y0 = load(y + k);
        s0 = vfmaq_f64(s0, x0, y0);
        w0 = vfmaq_f64(w0, x0, swap_pair(y0));
    }
    straight = vaddq_f64(s0, s1);
    swapped = vaddq_f64(w0, w1);
}

cplx dotc_neon(const cplx *x, const cplx *y, std::size_t n) {
    float64x2_t s, w;
    accumulate_products(x, y, n, s, w);
    return {vgetq_lane_f64(s, 0) + vgetq_lane_f64(s, 1), vgetq_lane_f64(w, 0) - vgetq_lane_f64(w, 1)};
}

cplx dotu_neon(const cplx *x, const cplx *y, std::size_t n) {
    float64x2_t s, w;
    accumulate_products(x, y, n, s, w);
    return {vgetq_lane_f64(s, 0) - vgetq_lane_f64(s, 1), vgetq_lane_f64(w, 0) + vgetq_lane_f64(w, 1)};
}

double norm_sq_neon(const cplx *x, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const float64x2_t v0 = load(x + k), v1 = load(x + k + 1);
        acc0 = vfmaq_f64(acc0, v0, v0);
        acc1 = vfmaq_f64(acc1, v1, v1);
    }
    if (k < n) {
        const float64x2_t v0 = load(x + k);
        acc0 = vfmaq_f64(acc0, v0, v0);
    }
    return vaddvq_f64(vaddq_f64(acc0, acc1));
}

// acc + alpha * v for one complex value.
inline float64x2_t complex_fma(float64x2_t acc, float64x2_t v, float64x2_t alpha_re,
                               float64x2_t alpha_im_signed) {
    return vfmaq_f64(vfmaq_f64(acc, v, alpha_re), swap_pair(v), alpha_im_signed);
}

void axpy_neon(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const float64x2_t ar = vdupq_n_f64(alpha.real());
    const double signed_im[2] = {-alpha.imag(), alpha.imag()};
    const float64x2_t ai = vld1q_f64(signed_im);
    for (std::size_t k = 0; k < n; ++k) {
        store(y + k, complex_fma(load(y + k), load(x + k), ar, ai));
    }
}

void scale_neon(cplx alpha, cplx *x, std::size_t n) {
    const float64x2_t ar = vdupq_n_f64(alpha.real());
    const double signed_im[2] = {-alpha.imag(), alpha.imag()};
    const float64x2_t ai = vld1q_f64(signed_im);
    const float64x2_t zero = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < n; ++k) {
        store(x + k, complex_fma(zero, load(x + k), ar, ai));
    }
}

}  // namespace

extern const KernelTable table;
const KernelTable table{
    Backend::Neon, &dotc_neon, &dotu_neon, &norm_sq_neon, &axpy_neon, &scale_neon,
};

}  // namespace wcav::kernels::neon
