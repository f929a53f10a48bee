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

#include <benchmark/benchmark.h>

#include "starcomp/starcomp.hpp"

using namespace starcomp;

namespace {
const ScenarioGeometry geom = ScenarioGeometry::table2();
const LargeScale ls = large_scale_from_geometry(geom);
} // namespace

static void BM_ComplexGaussian(benchmark::State& state) {
    RandomStream stream(1, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_standard_complex_gaussian(stream));
}
BENCHMARK(BM_ComplexGaussian);

static void BM_DrawChannelDrop(benchmark::State& state) {
    const auto elements = static_cast<std::size_t>(state.range(0));
    std::uint64_t drop = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(draw_channel_drop(geom, elements, drop++, 7));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DrawChannelDrop)->Arg(27)->Arg(54)->Arg(108);

static void BM_LeastNormSolve(benchmark::State& state) {
    const auto elements = static_cast<std::size_t>(state.range(0));
    const auto drop = draw_channel_drop(geom, elements, 0, 7);
    const auto sys = build_cancellation_system(drop, ls, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(least_norm_solve(sys.h_eff, sys.target));
}
BENCHMARK(BM_LeastNormSolve)->Arg(27)->Arg(54)->Arg(108);

static void BM_DesignSsecb(benchmark::State& state) {
    const auto elements = static_cast<std::size_t>(state.range(0));
    const auto drop = draw_channel_drop(geom, elements, 0, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(design_ssecb(drop, ls));
}
BENCHMARK(BM_DesignSsecb)->Arg(27)->Arg(54)->Arg(108);

static void BM_InstantaneousRates(benchmark::State& state) {
    const auto drop = draw_channel_drop(geom, 54, 0, 7);
    const auto design = design_ssecb(drop, ls);
    const auto alloc = PowerAllocation::from_geometry(geom);
    const double noise = noise_power(geom.bandwidth_hz);
    const double p = dbm_to_mw(-30.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            instantaneous_rates(drop, design.configs, ls, p, alloc, noise));
}
BENCHMARK(BM_InstantaneousRates);

static void BM_RunDropsPoint(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            run_drops(geom, DesignKind::ssecb, 54, -30.0, 512, 7, 1));
    state.SetItemsProcessed(state.iterations() * 512);
}
BENCHMARK(BM_RunDropsPoint)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
