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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wcav {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<cplx> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<const cplx> data() const { return data_; }
    std::span<cplx> data() { return data_; }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix adjoint(const ComplexMatrix &m);
ComplexMatrix conjugate(const ComplexMatrix &m);
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b);
std::vector<cplx> multiply(const ComplexMatrix &m, std::span<const cplx> x);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

cplx trace(const ComplexMatrix &m);

/// max_ij |m_ij|
double max_abs(const ComplexMatrix &m);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_error(const ComplexMatrix &m);

/// Hermitian part (m + m^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix &m);

/// Spectral decomposition m = V diag(values) V^dagger of a Hermitian matrix.
/// Eigenvalues ascend; `vectors.row(k)` holds the k-th eigenvector.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Only the lower triangle of `m` is read.
HermitianEigen hermitian_eigen(const ComplexMatrix &m);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix &m);

}  // namespace wcav
