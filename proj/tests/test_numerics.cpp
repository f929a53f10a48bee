// SPDX-License-Identifier: Apache-2.0
//
// starcomp - link-level simulator for STAR-RIS assisted two-cell NOMA downlinks
// Copyright (C) 2026 starcomp contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "starcomp/complex_gain.hpp"
#include "starcomp/errors.hpp"
#include "starcomp/least_norm.hpp"
#include "starcomp/random_stream.hpp"
#include "test_util.hpp"

using namespace starcomp;

TEST_CASE("complex gaussian sampler: unit power and Exp(1) magnitude-squared") {
    RandomStream stream(1234, 0);
    const std::size_t n = 1'000'000;
    double sum_pow = 0.0, tail = 0.0, sum_re = 0.0, sum_im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexGain g = sample_standard_complex_gaussian(stream);
        const double p = std::norm(g);
        sum_pow += p;
        if (p > 1.0)
            tail += 1.0;
        sum_re += g.real();
        sum_im += g.imag();
    }
    CHECK(sum_pow / n == doctest::Approx(1.0).epsilon(0.01));
    // P(|g|^2 > 1) = e^{-1} for the Exp(1) magnitude-squared law
    CHECK(tail / n == doctest::Approx(std::exp(-1.0)).epsilon(0.005 / std::exp(-1.0)));
    CHECK(std::fabs(sum_re / n) < 0.005);
    CHECK(std::fabs(sum_im / n) < 0.005);
}

TEST_CASE("sampler determinism: identical (seed, stream) reproduces bit for bit") {
    RandomStream a(7, 3);
    RandomStream b(7, 3);
    for (int i = 0; i < 1000; ++i) {
        const ComplexGain ga = sample_standard_complex_gaussian(a);
        const ComplexGain gb = sample_standard_complex_gaussian(b);
        CHECK(ga.real() == gb.real());
        CHECK(ga.imag() == gb.imag());
    }
}

TEST_CASE("distinct stream ids give distinct, weakly correlated sequences") {
    RandomStream a(7, 0);
    RandomStream b(7, 1);
    int equal = 0;
    double corr = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const ComplexGain ga = sample_standard_complex_gaussian(a);
        const ComplexGain gb = sample_standard_complex_gaussian(b);
        if (ga == gb)
            ++equal;
        corr += ga.real() * gb.real();
    }
    CHECK(equal == 0);
    CHECK(std::fabs(corr / 10000.0) < 0.02);
}

TEST_CASE("least_norm_solve: square invertible case") {
    ComplexMatrix a(2, 2);
    a.at(0, 0) = 1.0;
    a.at(0, 1) = 1.0;
    a.at(1, 0) = 1.0;
    a.at(1, 1) = -1.0;
    const std::vector<ComplexGain> b = {{2.0, 0.0}, {0.0, 0.0}};
    const auto x = least_norm_solve(a, b);
    REQUIRE(x.size() == 2);
    CHECK(std::abs(x[0] - ComplexGain(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(x[1] - ComplexGain(1.0, 0.0)) < 1e-12);
}

TEST_CASE("least_norm_solve: symmetric minimum-norm spread over an all-ones row") {
    ComplexMatrix a(1, 4);
    for (std::size_t l = 0; l < 4; ++l)
        a.at(0, l) = 1.0;
    const std::vector<ComplexGain> b = {{-2.0, 0.0}};
    const auto x = least_norm_solve(a, b);
    for (const auto& v : x)
        CHECK(std::abs(v - ComplexGain(-0.5, 0.0)) < 1e-12);
}

TEST_CASE("least_norm_solve: matches the extended-precision oracle entrywise") {
    testing::MtGaussian gauss(42);
    for (int rep = 0; rep < 50; ++rep) {
        const ComplexMatrix a = testing::random_matrix(gauss, 2, 8);
        const std::vector<ComplexGain> b = {gauss(), gauss()};
        const auto x = least_norm_solve(a, b);
        const auto ref = oracle::least_norm(a, b);
        for (std::size_t l = 0; l < x.size(); ++l) {
            const double dr = static_cast<double>(ref[l].real()) - x[l].real();
            const double di = static_cast<double>(ref[l].imag()) - x[l].imag();
            CHECK(std::hypot(dr, di) <= 1e-10);
        }
    }
}

TEST_CASE("least_norm_solve: residual and minimal-norm properties") {
    testing::MtGaussian gauss(7);
    for (const std::size_t cols : {2ul, 3ul, 8ul, 54ul}) {
        for (int rep = 0; rep < 25; ++rep) {
            const std::size_t rows = cols == 2 ? 2 : (rep % 2 ? 1 : 2);
            const ComplexMatrix a = testing::random_matrix(gauss, rows, cols);
            std::vector<ComplexGain> b(rows);
            for (auto& v : b)
                v = gauss();
            const auto x = least_norm_solve(a, b);

            // ||Ax - b|| <= 1e-10 * max(1, ||b||)
            double res = 0.0, b_norm = 0.0;
            for (std::size_t r = 0; r < rows; ++r) {
                ComplexGain acc(0.0, 0.0);
                for (std::size_t l = 0; l < cols; ++l)
                    acc += a.at(r, l) * x[l];
                res += std::norm(acc - b[r]);
                b_norm += std::norm(b[r]);
            }
            CHECK(std::sqrt(res) <= 1e-10 * std::max(1.0, std::sqrt(b_norm)));

            // adding any null-space direction cannot shrink the norm
            double x_norm = 0.0;
            for (const auto& v : x)
                x_norm += std::norm(v);
            for (int k = 0; k < 5; ++k) {
                std::vector<ComplexGain> z(cols);
                for (auto& v : z)
                    v = gauss();
                const auto null_dir = oracle::null_space_project(a, z);
                double perturbed = 0.0;
                for (std::size_t l = 0; l < cols; ++l) {
                    const ComplexGain n(static_cast<double>(null_dir[l].real()),
                                        static_cast<double>(null_dir[l].imag()));
                    perturbed += std::norm(x[l] + n);
                }
                CHECK(std::sqrt(perturbed) >= std::sqrt(x_norm) * (1.0 - 1e-10));
            }
        }
    }
}

TEST_CASE("least_norm_solve: singular and malformed systems") {
    SUBCASE("identical rows") {
        ComplexMatrix a(2, 4);
        for (std::size_t l = 0; l < 4; ++l) {
            a.at(0, l) = ComplexGain(1.0, 0.5);
            a.at(1, l) = ComplexGain(1.0, 0.5);
        }
        const std::vector<ComplexGain> b = {{1.0, 0.0}, {2.0, 0.0}};
        CHECK_THROWS_AS((void)least_norm_solve(a, b), SingularSystem);
    }
    SUBCASE("zero single row") {
        ComplexMatrix a(1, 3);
        const std::vector<ComplexGain> b = {{1.0, 0.0}};
        CHECK_THROWS_AS((void)least_norm_solve(a, b), SingularSystem);
    }
    SUBCASE("condition cap is honored") {
        // rows almost parallel: eigenvalue ratio far above a tight cap
        ComplexMatrix a(2, 3);
        for (std::size_t l = 0; l < 3; ++l) {
            a.at(0, l) = ComplexGain(1.0, 0.0);
            a.at(1, l) = ComplexGain(1.0 + 1e-9 * static_cast<double>(l), 0.0);
        }
        const std::vector<ComplexGain> b = {{1.0, 0.0}, {1.0, 0.0}};
        CHECK_THROWS_AS((void)least_norm_solve(a, b, 1e6), SingularSystem);
    }
    SUBCASE("unsupported shapes") {
        ComplexMatrix tall(2, 1);
        const std::vector<ComplexGain> b2 = {{1.0, 0.0}, {1.0, 0.0}};
        CHECK_THROWS_AS((void)least_norm_solve(tall, b2), std::invalid_argument);
        ComplexMatrix three(3, 4);
        const std::vector<ComplexGain> b3 = {{1, 0}, {1, 0}, {1, 0}};
        CHECK_THROWS_AS((void)least_norm_solve(three, b3), std::invalid_argument);
        ComplexMatrix ok(2, 4);
        ok.at(0, 0) = 1.0;
        ok.at(1, 1) = 1.0;
        const std::vector<ComplexGain> b1 = {{1.0, 0.0}};
        CHECK_THROWS_AS((void)least_norm_solve(ok, b1), std::invalid_argument);
    }
}

TEST_CASE("cophase_angle: examples") {
    CHECK(cophase_angle(0.5, 2.0) == doctest::Approx(4.7831853072).epsilon(1e-9));
    CHECK(cophase_angle(1.234, 1.234) == 0.0);
    CHECK(cophase_angle(0.0, 3.0 * pi) == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("cophase_angle: range and 2*pi*k invariance") {
    testing::MtGaussian gauss(11);
    for (int rep = 0; rep < 2000; ++rep) {
        const double target = 20.0 * gauss().real();
        const double path = 20.0 * gauss().real();
        const double base = cophase_angle(target, path);
        CHECK(base >= 0.0);
        CHECK(base < two_pi);
        for (int k = -3; k <= 3; ++k) {
            const double shifted = cophase_angle(target + two_pi * k, path);
            CHECK(testing::circle_distance(shifted, base) < 1e-9);
            const double shifted_path = cophase_angle(target, path + two_pi * k);
            CHECK(testing::circle_distance(shifted_path, base) < 1e-9);
        }
    }
}

TEST_CASE("phase_2pi: wraps arg into [0, 2*pi)") {
    CHECK(phase_2pi(ComplexGain(1.0, 0.0)) == 0.0);
    CHECK(phase_2pi(ComplexGain(0.0, 1.0)) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(phase_2pi(ComplexGain(0.0, -1.0)) == doctest::Approx(1.5 * pi).epsilon(1e-15));
    CHECK(phase_2pi(ComplexGain(-1.0, -1e-18)) < two_pi);
}
