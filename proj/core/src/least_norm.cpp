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

#include "starcomp/least_norm.hpp"

#include <cmath>
#include <stdexcept>

#include "starcomp/errors.hpp"

namespace starcomp {

std::vector<ComplexGain> least_norm_solve(const ComplexMatrix& a,
                                          std::span<const ComplexGain> b,
                                          double condition_cap) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m < 1 || m > 2)
        throw std::invalid_argument("least_norm_solve: supports 1 or 2 rows, got " +
                                    std::to_string(m));
    if (n < m)
        throw std::invalid_argument("least_norm_solve: system must be wide (rows <= cols)");
    if (b.size() != m)
        throw std::invalid_argument("least_norm_solve: rhs length does not match row count");
    if (!(condition_cap >= 1.0))
        throw std::invalid_argument("least_norm_solve: condition cap must be >= 1");

    // Gram matrix G = A A^H. Hermitian, so two real diagonals and one
    // off-diagonal complex entry cover the 2x2 case.
    double g00 = 0.0, g11 = 0.0;
    ComplexGain g01(0.0, 0.0);
    for (std::size_t l = 0; l < n; ++l) {
        const ComplexGain a0 = a.at(0, l);
        g00 += std::norm(a0);
        if (m == 2) {
            const ComplexGain a1 = a.at(1, l);
            g11 += std::norm(a1);
            g01 += a0 * std::conj(a1);
        }
    }

    // Solve G y = b through the explicit inverse, guarded by the eigenvalue
    // ratio of G.
    ComplexGain y0(0.0, 0.0), y1(0.0, 0.0);
    if (m == 1) {
        if (!(g00 > 0.0) || !std::isfinite(g00))
            throw SingularSystem("least_norm_solve: zero or non-finite row");
        y0 = b[0] / g00;
    } else {
        const double trace_half = 0.5 * (g00 + g11);
        const double diff_half = 0.5 * (g00 - g11);
        const double disc = std::sqrt(diff_half * diff_half + std::norm(g01));
        const double eig_max = trace_half + disc;
        const double eig_min = trace_half - disc;
        if (!std::isfinite(eig_max) || eig_max <= 0.0 || !(eig_min > eig_max / condition_cap))
            throw SingularSystem(
                "least_norm_solve: Gram matrix numerically singular (linearly "
                "dependent effective channels)");
        const double det = g00 * g11 - std::norm(g01);
        y0 = (g11 * b[0] - g01 * b[1]) / det;
        y1 = (g00 * b[1] - std::conj(g01) * b[0]) / det;
    }

    // x = A^H y lies in the row space of A, hence has minimal norm.
    std::vector<ComplexGain> x(n);
    for (std::size_t l = 0; l < n; ++l) {
        ComplexGain v = std::conj(a.at(0, l)) * y0;
        if (m == 2)
            v += std::conj(a.at(1, l)) * y1;
        x[l] = v;
    }
    return x;
}

} // namespace starcomp
