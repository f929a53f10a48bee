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

#ifndef STARCOMP_EXPERIMENT_HPP
#define STARCOMP_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "starcomp/beamforming.hpp"
#include "starcomp/geometry.hpp"
#include "starcomp/link.hpp"

namespace starcomp {

/// Thermal noise power in mW for the given bandwidth:
/// -174 dBm/Hz + 10*log10(B).
double noise_power(double bandwidth_hz);

/// Per-user amplitude demand of perfect cancellation under unit channel
/// gains: sqrt(eps_interf / eps_transmit), ordered (ccu, ceu).
std::array<double, 2> cancellation_demands(const LargeScale& ls);

/// Smallest element count that leaves the strong-LoS cancellation system
/// solvable within the unit amplitude budget: the least integer strictly
/// greater than the larger of the two demands.
int min_elements(const LargeScale& ls);

/// Mean and standard error of one user's achievable rate at one sweep point.
/// std_error is NaN when it cannot be estimated (single drop).
struct UserRateStats {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Monte-Carlo estimate for one (design, L, p) point.
struct DropPoint {
    DesignKind design = DesignKind::none;
    int elements = 0;
    double p_dbm = 0.0;
    std::array<UserRateStats, 2> rate; // indexed by User
    double feasible_fraction = 1.0;
    std::uint64_t drops = 0;
    std::uint64_t singular_drops = 0;
    std::uint64_t seed = 0;
};

/// Runs `drops` independent channel drops and averages the cell-1 user rates
/// (cell 2 is statistically identical by symmetry).
///
/// Drops are evaluated in fixed-size chunks that threads pick up
/// independently; chunk partials are reduced in index order, so the result is
/// bitwise identical for any thread count. A singular cancellation system
/// (probability zero under continuous fading) falls back to a
/// reflection-only configuration, counts as infeasible and is tallied in
/// singular_drops rather than aborting the sweep.
DropPoint run_drops(const ScenarioGeometry& geom, DesignKind design, int elements, double p_dbm,
                    std::uint64_t drops, std::uint64_t master_seed, unsigned threads = 0);

/// Optional exponent grids for the min-elements sweep. Empty vectors mean
/// "use the scenario value". alpha3 drives both RIS-user exponents
/// (alpha3_c = alpha3_e = alpha3).
struct ExponentGrids {
    std::vector<double> alpha2;
    std::vector<double> alpha3;
    std::vector<double> alpha4;

    bool active() const { return !alpha2.empty() || !alpha3.empty() || !alpha4.empty(); }
    bool operator==(const ExponentGrids&) const = default;
};

/// Axes of one experiment sweep. When exponent_overrides is active the sweep
/// evaluates min_elements over the exponent grid analytically (no sampling);
/// otherwise it runs Monte-Carlo points over elements x power_dbm.
struct SweepSpec {
    DesignKind design = DesignKind::ssecb;
    std::vector<int> elements = {54};
    std::vector<double> power_dbm = {-30.0};
    ExponentGrids exponent_overrides;
    std::uint64_t drops = 10000;
    std::uint64_t master_seed = 42;
    unsigned threads = 0; // 0 = hardware concurrency

    /// Throws ConfigError on empty axes, zero drops or element counts too
    /// small for the requested design.
    void validate() const;
};

/// One row of the analytic min-elements grid.
struct MinElementsPoint {
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double alpha4 = 0.0;
    int min_elements = 0;
};

/// Either a list of Monte-Carlo points or a min-elements grid.
struct SweepResult {
    std::vector<DropPoint> points;
    std::vector<MinElementsPoint> grid;

    bool is_grid() const { return !grid.empty(); }
};

SweepResult sweep(const SweepSpec& spec, const ScenarioGeometry& geom);

} // namespace starcomp

#endif
