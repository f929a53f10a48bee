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

#ifndef STARCOMP_LEAST_NORM_HPP
#define STARCOMP_LEAST_NORM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "starcomp/complex_gain.hpp"

namespace starcomp {

/// Dense row-major complex matrix. The solver only accepts wide systems with
/// one or two rows, which is all this library ever builds.
class ComplexMatrix {
  public:
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    ComplexGain& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const ComplexGain& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<ComplexGain> data_;
};

/// Minimum-norm solution of the wide system A x = b, i.e.
/// x = A^H (A A^H)^{-1} b: among all solutions it has the smallest Euclidean
/// norm, which spreads the amplitude budget across the surface elements.
///
/// The Gram matrix A A^H (at most 2x2 Hermitian) is inverted explicitly.
/// Throws SingularSystem when its eigenvalue ratio exceeds `condition_cap`
/// (the two effective channels are linearly dependent), and
/// std::invalid_argument on unsupported shapes (rows > cols, rows not 1 or 2,
/// mismatched b).
std::vector<ComplexGain> least_norm_solve(const ComplexMatrix& a,
                                          std::span<const ComplexGain> b,
                                          double condition_cap = 1e12);

} // namespace starcomp

#endif
