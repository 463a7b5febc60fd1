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

#include "wcav/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "wcav/errors.hpp"
#include "wcav/kernels.hpp"

namespace wcav {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix adjoint(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix &m) {
    ComplexMatrix out(m.rows(), m.cols());
    std::transform(m.data().begin(), m.data().end(), out.data().begin(), [](cplx z) { return std::conj(z); });
    return out;
}

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InputError("matrix product: inner dimensions differ");
    }
    // Row i of the product accumulates a(i,k) * (row k of b).
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::span<cplx> dst = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx coeff = a(i, k);
            if (coeff != cplx{0.0, 0.0}) {
                kernels::axpy(coeff, b.row(k), dst);
            }
        }
    }
    return out;
}

ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("matrix difference: shapes differ");
    }
    ComplexMatrix out = a;
    kernels::axpy(-1.0, b.data(), out.data());
    return out;
}

std::vector<cplx> multiply(const ComplexMatrix &m, std::span<const cplx> x) {
    if (m.cols() != x.size()) {
        throw InputError("matrix-vector product: dimension mismatch");
    }
    std::vector<cplx> y(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        y[r] = kernels::dotu(m.row(r), x);
    }
    return y;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

cplx trace(const ComplexMatrix &m) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        acc += m(i, i);
    }
    return acc;
}

double max_abs(const ComplexMatrix &m) {
    double best = 0.0;
    for (const cplx &z : m.data()) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("matrix comparison: shapes differ");
    }
    double best = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        best = std::max(best, std::abs(a.data()[k] - b.data()[k]));
    }
    return best;
}

double hermiticity_error(const ComplexMatrix &m) {
    if (!m.is_square()) {
        return std::numeric_limits<double>::infinity();
    }
    double best = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            best = std::max(best, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return best;
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    return out;
}

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return out;
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw InputError("eigendecomposition requires a square matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver did not converge");
    }
    const std::size_t n = m.rows();
    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    const auto &vals = solver.eigenvalues();
    const auto &vecs = solver.eigenvectors();
    for (std::size_t k = 0; k < n; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        out.values[k] = vals(kk);
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(k, i) = vecs(static_cast<Eigen::Index>(i), kk);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw InputError("eigendecomposition requires a square matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("Hermitian eigensolver did not converge");
    }
    const auto &vals = solver.eigenvalues();
    return {vals.data(), vals.data() + vals.size()};
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return {};
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto &vals = svd.singularValues();
    return {vals.data(), vals.data() + vals.size()};
}

}  // namespace wcav
