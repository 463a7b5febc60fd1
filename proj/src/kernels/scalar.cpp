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

// Reference kernels. Plain loops with the complex products written out, so
// the result does not depend on how the compiler lowers std::complex
// multiplication.

#include "wcav/kernels.hpp"

namespace wcav::kernels::scalar {
namespace {

cplx dotc_scalar(const cplx *x, const cplx *y, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        const double yr = y[k].real(), yi = y[k].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

cplx dotu_scalar(const cplx *x, const cplx *y, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        const double yr = y[k].real(), yi = y[k].imag();
        re += xr * yr - xi * yi;
        im += xr * yi + xi * yr;
    }
    return {re, im};
}

double norm_sq_scalar(const cplx *x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        acc += x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
    }
    return acc;
}

void axpy_scalar(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        y[k] = {y[k].real() + ar * xr - ai * xi, y[k].imag() + ar * xi + ai * xr};
    }
}

void scale_scalar(cplx alpha, cplx *x, std::size_t n) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[k].real(), xi = x[k].imag();
        x[k] = {ar * xr - ai * xi, ar * xi + ai * xr};
    }
}

}  // namespace

const KernelTable table{
    Backend::Scalar, &dotc_scalar, &dotu_scalar, &norm_sq_scalar, &axpy_scalar, &scale_scalar,
};

}  // namespace wcav::kernels::scalar
