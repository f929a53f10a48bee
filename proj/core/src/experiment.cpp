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

#include "starcomp/experiment.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "starcomp/errors.hpp"
#include "starcomp/units.hpp"

namespace starcomp {

double noise_power(double bandwidth_hz) {
    if (!(bandwidth_hz > 0.0))
        throw DomainError("noise_power: bandwidth must be positive");
    return dbm_to_mw(-174.0 + 10.0 * std::log10(bandwidth_hz));
}

std::array<double, 2> cancellation_demands(const LargeScale& ls) {
    std::array<double, 2> demands;
    for (int u = 0; u < 2; ++u) {
        if (!(ls.eps_interf[u] > 0.0) || !(ls.eps_transmit[u] > 0.0))
            throw DomainError("cancellation_demands: large-scale gains must be positive");
        demands[u] = std::sqrt(ls.eps_interf[u] / ls.eps_transmit[u]);
    }
    return demands;
}

int min_elements(const LargeScale& ls) {
    const auto demands = cancellation_demands(ls);
    const double needed = std::max(demands[0], demands[1]);
    // strictly greater: an exactly-integer demand still needs one more element
    return static_cast<int>(std::floor(needed)) + 1;
}

namespace {

constexpr std::uint64_t chunk_size = 512;

struct ChunkPartial {
    std::array<double, 2> sum{0.0, 0.0};
    std::array<double, 2> sum_sq{0.0, 0.0};
    std::uint64_t feasible = 0;
    std::uint64_t singular = 0;
};

struct DropContext {
    const ScenarioGeometry& geom;
    LargeScale ls;
    PowerAllocation alloc;
    DesignKind design;
    int elements;
    double p_mw;
    double noise_mw;
    std::uint64_t master_seed;
};

ChunkPartial evaluate_chunk(const DropContext& ctx, std::uint64_t begin, std::uint64_t end) {
    ChunkPartial part;
    for (std::uint64_t i = begin; i < end; ++i) {
        const SmallScaleDrop drop =
            draw_channel_drop(ctx.geom, static_cast<std::size_t>(ctx.elements), i,
                              ctx.master_seed);
        RisDesign design;
        bool singular = false;
        try {
            design = make_design(ctx.design, drop, ctx.ls);
        } catch (const SingularSystem&) {
            // No transmission is possible; fall back to pure reflection and
            // keep the full interference (scale 0).
            design = design_baseline(DesignKind::seb_ccu, drop, ctx.ls);
            design.kind = ctx.design;
            singular = true;
        }

        const RateReport report =
            instantaneous_rates(drop, design.configs, ctx.ls, ctx.p_mw, ctx.alloc, ctx.noise_mw);
        part.sum[0] += report.rate_ccu;
        part.sum_sq[0] += report.rate_ccu * report.rate_ccu;
        part.sum[1] += report.rate_ceu;
        part.sum_sq[1] += report.rate_ceu * report.rate_ceu;
        if (!singular && design.feasible())
            ++part.feasible;
        if (singular)
            ++part.singular;
    }
    return part;
}

} // namespace

DropPoint run_drops(const ScenarioGeometry& geom, DesignKind design, int elements, double p_dbm,
                    std::uint64_t drops, std::uint64_t master_seed, unsigned threads) {
    if (drops == 0)
        throw ConfigError("run_drops: drop count must be >= 1");
    if (elements < 1)
        throw ConfigError("run_drops: element count must be >= 1");
    const bool solves = design == DesignKind::ssecb || design == DesignKind::scb;
    if (solves && elements < 2)
        throw ConfigError("run_drops: cancellation designs need at least 2 elements");

    geom.validate();
    DropContext ctx{geom,
                    large_scale_from_geometry(geom),
                    PowerAllocation::from_geometry(geom),
                    design,
                    elements,
                    dbm_to_mw(p_dbm),
                    noise_power(geom.bandwidth_hz),
                    master_seed};
    ctx.alloc.validate();

    const std::uint64_t n_chunks = (drops + chunk_size - 1) / chunk_size;
    std::vector<ChunkPartial> partials(n_chunks);

    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 1;
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n_chunks));

    if (workers <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            partials[c] = evaluate_chunk(ctx, c * chunk_size,
                                         std::min(drops, (c + 1) * chunk_size));
    } else {
        // Chunk boundaries are fixed, so whichever thread computes a chunk
        // produces the same partial; the ordered reduction below makes the
        // final result independent of the thread count.
        std::atomic<std::uint64_t> next{0};
        auto work = [&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks)
                    return;
                partials[c] = evaluate_chunk(ctx, c * chunk_size,
                                             std::min(drops, (c + 1) * chunk_size));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    ChunkPartial total;
    for (const auto& part : partials) {
        for (int u = 0; u < 2; ++u) {
            total.sum[u] += part.sum[u];
            total.sum_sq[u] += part.sum_sq[u];
        }
        total.feasible += part.feasible;
        total.singular += part.singular;
    }

    DropPoint point;
    point.design = design;
    point.elements = elements;
    point.p_dbm = p_dbm;
    point.drops = drops;
    point.singular_drops = total.singular;
    point.seed = master_seed;
    point.feasible_fraction = static_cast<double>(total.feasible) / static_cast<double>(drops);
    const double n = static_cast<double>(drops);
    for (int u = 0; u < 2; ++u) {
        const double mean = total.sum[u] / n;
        point.rate[u].mean = mean;
        if (drops < 2) {
            point.rate[u].std_error = std::numeric_limits<double>::quiet_NaN();
        } else {
            const double var = std::max(0.0, (total.sum_sq[u] - n * mean * mean) / (n - 1.0));
            point.rate[u].std_error = std::sqrt(var / n);
        }
    }
    return point;
}

void SweepSpec::validate() const {
    if (drops == 0)
        throw ConfigError("sweep: drop count must be >= 1");
    if (exponent_overrides.active())
        return; // analytic mode ignores the sampling axes
    if (elements.empty())
        throw ConfigError("sweep: element list must not be empty");
    if (power_dbm.empty())
        throw ConfigError("sweep: power list must not be empty");
    const bool solves = design == DesignKind::ssecb || design == DesignKind::scb;
    for (int n : elements) {
        if (n < 1 || (solves && n < 2))
            throw ConfigError("sweep: element count too small for design");
    }
}

SweepResult sweep(const SweepSpec& spec, const ScenarioGeometry& geom) {
    spec.validate();
    geom.validate();

    SweepResult result;
    if (spec.exponent_overrides.active()) {
        // Analytic mode: minimal element counts over the exponent grid, the
        // alpha3 axis driving both RIS-user exponents.
        const auto& grids = spec.exponent_overrides;
        const std::vector<double> a2 =
            grids.alpha2.empty() ? std::vector<double>{geom.alpha2} : grids.alpha2;
        if (grids.alpha3.empty())
            throw ConfigError("sweep: min-elements grid requires an alpha3 grid");
        const std::vector<double> a4 =
            grids.alpha4.empty() ? std::vector<double>{geom.alpha4} : grids.alpha4;

        for (double alpha2 : a2) {
            for (double alpha4 : a4) {
                for (double alpha3 : grids.alpha3) {
                    ScenarioGeometry g = geom;
                    g.alpha2 = alpha2;
                    g.alpha3_c = alpha3;
                    g.alpha3_e = alpha3;
                    g.alpha4 = alpha4;
                    result.grid.push_back(
                        {alpha2, alpha3, alpha4, min_elements(large_scale_from_geometry(g))});
                }
            }
        }
        return result;
    }

    for (int elements : spec.elements)
        for (double p_dbm : spec.power_dbm)
            result.points.push_back(run_drops(geom, spec.design, elements, p_dbm, spec.drops,
                                              spec.master_seed, spec.threads));
    return result;
}

} // namespace starcomp
