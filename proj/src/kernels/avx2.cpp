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

// AVX2/FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// must only be reached through the dispatcher after a CPU feature check.
//
// A 256-bit register holds two interleaved complex values
// [re0, im0, re1, im1]. Products are split into a "straight" accumulator
// (x * y lane-wise) and a "swapped" accumulator (x * swap(y)); the real and
// imaginary parts of the dot product are recovered from even/odd lane sums.

#include <immintrin.h>

#include "wcav/kernels.hpp"

namespace wcav::kernels::avx2 {
namespace {

// Swap re/im within each complex lane pair.
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

struct LaneSums {
    double even;
    double odd;
};

inline LaneSums lane_sums(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

inline const double *as_doubles(const cplx *p) { return reinterpret_cast<const double *>(p); }
inline double *as_doubles(cplx *p) { return reinterpret_cast<double *>(p); }

// Accumulates straight/swapped products over the vectorizable prefix and
// returns the number of complex elements consumed.
inline std::size_t accumulate_products(const cplx *x, const cplx *y, std::size_t n, __m256d &straight,
                                       __m256d &swapped) {
    const double *xd = as_doubles(x);
    const double *yd = as_doubles(y);
    __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
    __m256d w0 = _mm256_setzero_pd(), w1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d x0 = _mm256_loadu_pd(xd + 2 * k);
        const __m256d x1 = _mm256_loadu_pd(xd + 2 * k + 4);
        const __m256d y0 = _mm256_loadu_pd(yd + 2 * k);
        const __m256d y1 = _mm256_loadu_pd(yd + 2 * k + 4);
        s0 = _mm256_fmadd_pd(x0, y0, s0);
        s1 = _mm256_fmadd_pd(x1, y1, s1);
        w0 = _mm256_fmadd_pd(x0, swap_pairs(y0), w0);
        w1 = _mm256_fmadd_pd(x1, swap_pairs(y1), w1);
    }
    for (; k + 2 <= n; k += 2) {
        const __m256d x0 = _mm256_loadu_pd(xd + 2 * k);
        const __m256d y0 = _mm256_loadu_pd(yd + 2 * k);
        s0 = _mm256_fmadd_pd(x0, y0, s0);
        w0 = _mm256_fmadd_pd(x0, swap_pairs(y0), w0);
    }
    straight = _mm256_add_pd(s0, s1);
    swapped = _mm256_add_pd(w0, w1);
    return k;
}

cplx dotc_avx2(const cplx *x, const cplx *y, std::size_t n) {
    __m256d straight, swapped;
    const std::size_t done = accumulate_products(x, y, n, straight, swapped);
    const LaneSums a = lane_sums(straight);
    const LaneSums b = lane_sums(swapped);
    double re = a.even + a.odd;
    double im = b.even - b.odd;
    for (std::size_t k = done; k < n; ++k) {
        re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
        im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
    }
    return {re, im};
}

cplx dotu_avx2(const cplx *x, const cplx *y, std::size_t n) {
    __m256d straight, swapped;
    const std::size_t done = accumulate_products(x, y, n, straight, swapped);
    const LaneSums a = lane_sums(straight);
    const LaneSums b = lane_sums(swapped);
    double re = a.even - a.odd;
    double im = b.even + b.odd;
    for (std::size_t k = done; k < n; ++k) {
        re += x[k].real() * y[k].real() - x[k].imag() * y[k].imag();
        im += x[k].real() * y[k].imag() + x[k].imag() * y[k].real();
    }
    return {re, im};
}

double norm_sq_avx2(const cplx *x, std::size_t n) {
    const double *xd = as_doubles(x);
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d v0 = _mm256_loadu_pd(xd + 2 * k);
        const __m256d v1 = _mm256_loadu_pd(xd + 2 * k + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; k + 2 <= n; k += 2) {
        const __m256d v0 = _mm256_loadu_pd(xd + 2 * k);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    }
    const LaneSums s = lane_sums(_mm256_add_pd(acc0, acc1));
    double total = s.even + s.odd;
    for (; k < n; ++k) {
        total += x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
    }
    return total;
}

// alpha * v for two packed complex values.
inline __m256d complex_mul(__m256d v, __m256d alpha_re, __m256d alpha_im) {
    return _mm256_fmaddsub_pd(v, alpha_re, _mm256_mul_pd(swap_pairs(v), alpha_im));
}

void axpy_avx2(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const double *xd = as_doubles(x);
    double *yd = as_doubles(y);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * k);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * k);
        _mm256_storeu_pd(yd + 2 * k, _mm256_add_pd(yv, complex_mul(xv, ar, ai)));
    }
    for (; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        y[k] = {y[k].real() + alpha.real() * xr - alpha.imag() * xi,
                y[k].imag() + alpha.real() * xi + alpha.imag() * xr};
    }
}

void scale_avx2(cplx alpha, cplx *x, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    double *xd = as_doubles(x);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * k);
        _mm256_storeu_pd(xd + 2 * k, complex_mul(xv, ar, ai));
    }
    for (; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        x[k] = {alpha.real() * xr - alpha.imag() * xi, alpha.real() * xi + alpha.imag() * xr};
    }
}

}  // namespace

extern const KernelTable table;
const KernelTable table{
    Backend::Avx2, &dotc_avx2, &dotu_avx2, &norm_sq_avx2, &axpy_avx2, &scale_avx2,
};

}  // namespace wcav::kernels::avx2
