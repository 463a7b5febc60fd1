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

#include "wcav/kernels.hpp"

#include <gtest/gtest.h>

#include <random>

namespace wcav::kernels {
namespace {

std::vector<cplx> random_vector(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> v(n);
    for (cplx &x : v) {
        x = {normal(rng), normal(rng)};
    }
    return v;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelEquivalence, every_backend_matches_scalar) {
    const std::size_t n = GetParam();
    std::mt19937_64 rng(n * 7919 + 1);
    const std::vector<cplx> x = random_vector(n, rng);
    const std::vector<cplx> y = random_vector(n, rng);
    const cplx alpha{0.37, -1.21};
    const KernelTable &ref = scalar::table;
    const double tol = 1e-14 * static_cast<double>(n + 1);

    for (Backend b : available_backends()) {
        SCOPED_TRACE(std::string(backend_name(b)));
        const KernelTable &k = *table_for(b);
        EXPECT_LE(std::abs(k.dotc(x.data(), y.data(), n) - ref.dotc(x.data(), y.data(), n)), tol);
        EXPECT_LE(std::abs(k.dotu(x.data(), y.data(), n) - ref.dotu(x.data(), y.data(), n)), tol);
        EXPECT_NEAR(k.norm_sq(x.data(), n), ref.norm_sq(x.data(), n), tol);

        std::vector<cplx> y1 = y, y2 = y;
        k.axpy(alpha, x.data(), y1.data(), n);
        ref.axpy(alpha, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LE(std::abs(y1[i] - y2[i]), 1e-14);
        }

        std::vector<cplx> s1 = x, s2 = x;
        k.scale(alpha, s1.data(), n);
        ref.scale(alpha, s2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LE(std::abs(s1[i] - s2[i]), 1e-14);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Lengths, KernelEquivalence, ::testing::Values(0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 64, 1001));

TEST(Kernels, scalar_reference_matches_std_complex) {
    std::mt19937_64 rng(3);
    const std::vector<cplx> x = random_vector(11, rng);
    const std::vector<cplx> y = random_vector(11, rng);
    cplx c = 0.0, u = 0.0;
    double nn = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        c += std::conj(x[i]) * y[i];
        u += x[i] * y[i];
        nn += std::norm(x[i]);
    }
    EXPECT_LE(std::abs(scalar::table.dotc(x.data(), y.data(), x.size()) - c), 1e-13);
    EXPECT_LE(std::abs(scalar::table.dotu(x.data(), y.data(), x.size()) - u), 1e-13);
    EXPECT_NEAR(scalar::table.norm_sq(x.data(), x.size()), nn, 1e-13);
}

TEST(Kernels, dispatch_reports_an_available_backend) {
    const Backend active_backend = active().backend;
    const std::vector<Backend> all = available_backends();
    EXPECT_NE(std::find(all.begin(), all.end(), active_backend), all.end());
    EXPECT_NE(table_for(Backend::Scalar), nullptr);
    EXPECT_EQ(backend_name(Backend::Scalar), "scalar");
}

TEST(Kernels, span_wrappers_route_to_active_table) {
    const std::vector<cplx> x{{1, 2}, {3, -1}};
    const std::vector<cplx> y{{0, 1}, {2, 2}};
    // conj(1+2i)(i) + conj(3-i)(2+2i) = (2+i) + (4+8i)
    EXPECT_LE(std::abs(dotc(x, y) - cplx(6, 9)), 1e-15);
    EXPECT_DOUBLE_EQ(norm_sq(x), 15.0);
    std::vector<cplx> z = y;
    axpy(cplx(0, 1), x, z);
    EXPECT_LE(std::abs(z[0] - cplx(-2, 2)), 1e-15);
    EXPECT_LE(std::abs(z[1] - cplx(3, 5)), 1e-15);
}

}  // namespace
}  // namespace wcav::kernels
