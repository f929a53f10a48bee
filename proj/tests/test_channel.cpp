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

#include "oracle.hpp"
#include "starcomp/channel.hpp"
#include "starcomp/errors.hpp"
#include "starcomp/geometry.hpp"
#include "test_util.hpp"

using namespace starcomp;

TEST_CASE("path_loss: power-law examples") {
    CHECK(path_loss(30.0, 3.0) == doctest::Approx(3.7037037037e-5).epsilon(1e-9));
    CHECK(path_loss(1.0, 5.0) == 1.0);
    CHECK(path_loss(120.0, 3.5) == doctest::Approx(5.2828178772e-8).epsilon(1e-9));
    // 4-digit reference values
    CHECK(path_loss(30.0, 3.0) == doctest::Approx(3.7037e-5).epsilon(1e-3));
    CHECK(path_loss(120.0, 3.5) == doctest::Approx(5.284e-8).epsilon(1e-3));
}

TEST_CASE("path_loss: domain errors") {
    CHECK_THROWS_AS((void)path_loss(0.0, 3.0), DomainError);
    CHECK_THROWS_AS((void)path_loss(-2.0, 3.0), DomainError);
    CHECK_THROWS_AS((void)path_loss(10.0, 0.0), DomainError);
    CHECK_THROWS_AS((void)path_loss(10.0, -1.0), DomainError);
}

TEST_CASE("path_loss: strictly decreasing in distance and exponent beyond 1 m") {
    testing::MtGaussian gauss(3);
    for (int rep = 0; rep < 500; ++rep) {
        const double d = 1.0 + 200.0 * std::fabs(gauss().real());
        const double alpha = 0.5 + 4.0 * std::fabs(gauss().real());
        const double step = 0.1 + std::fabs(gauss().real());
        CHECK(path_loss(d + step, alpha) < path_loss(d, alpha));
        CHECK(path_loss(d + step, alpha + 0.3) < path_loss(d + step, alpha));
    }
}

TEST_CASE("large_scale_from_geometry: reference-scenario cascades") {
    const auto ls = large_scale_from_geometry(ScenarioGeometry::table2());

    CHECK(ls.reflect(User::ccu) == doctest::Approx(7.542005907608e-11).epsilon(1e-10));
    CHECK(ls.reflect(User::ceu) == doctest::Approx(4.386184120063e-9).epsilon(1e-10));
    // 4-digit references
    CHECK(ls.reflect(User::ccu) == doctest::Approx(7.542e-11).epsilon(1e-3));
    CHECK(ls.reflect(User::ceu) == doctest::Approx(4.387e-9).epsilon(1e-3));

    const auto ref = oracle::large_scale(ScenarioGeometry::table2());
    for (int u = 0; u < 2; ++u) {
        CHECK(ls.eps_direct[u] ==
              doctest::Approx(static_cast<double>(ref.eps_direct[u])).epsilon(1e-12));
        CHECK(ls.eps_interf[u] ==
              doctest::Approx(static_cast<double>(ref.eps_interf[u])).epsilon(1e-12));
        CHECK(ls.eps_reflect[u] ==
              doctest::Approx(static_cast<double>(ref.eps_reflect[u])).epsilon(1e-12));
        CHECK(ls.eps_transmit[u] ==
              doctest::Approx(static_cast<double>(ref.eps_transmit[u])).epsilon(1e-12));
        // every reference-scenario gain sits strictly inside (0, 1)
        CHECK(ls.eps_direct[u] > 0.0);
        CHECK(ls.eps_direct[u] < 1.0);
        CHECK(ls.eps_interf[u] < 1.0);
        CHECK(ls.eps_reflect[u] < 1.0);
        CHECK(ls.eps_transmit[u] < 1.0);
    }
}

TEST_CASE("large_scale_from_geometry: unit geometry gives unit gains") {
    ScenarioGeometry g;
    g.d_bs_ccu = g.d_bs_ceu = g.d_bs_ris = g.d_ris_ccu = g.d_ris_ceu = 1.0;
    g.d_bs_other_ccu = g.d_bs_other_ceu = 1.0;
    const auto ls = large_scale_from_geometry(g);
    for (int u = 0; u < 2; ++u) {
        CHECK(ls.eps_direct[u] == 1.0);
        CHECK(ls.eps_interf[u] == 1.0);
        CHECK(ls.eps_reflect[u] == 1.0);
        CHECK(ls.eps_transmit[u] == 1.0);
    }
}

TEST_CASE("geometry validation") {
    ScenarioGeometry g;
    g.d_bs_ris = 0.0;
    CHECK_THROWS_AS(g.validate(), DomainError);
    g = ScenarioGeometry{};
    g.gamma_e_sq = 0.7; // sum 1.1
    CHECK_THROWS_AS(g.validate(), DomainError);
    g = ScenarioGeometry{};
    g.rician_k1 = -1.0;
    CHECK_THROWS_AS(g.validate(), DomainError);
    CHECK_NOTHROW(ScenarioGeometry::table2().validate());
    ScenarioGeometry low;
    low.alpha3_e = 1.5;
    CHECK(low.warnings().size() == 1);
    CHECK(ScenarioGeometry::table2().warnings().empty());
}

TEST_CASE("rician_power_split: weights sum to one exactly") {
    for (const double k : {0.0, 1e-6, 0.1, 0.5, 1.0, 2.0, 3.0, 17.77, 1e3, 1e6, 1e12}) {
        const auto split = rician_power_split(k);
        CHECK(split.los + split.nlos == 1.0);
        CHECK(split.nlos == doctest::Approx(1.0 / (k + 1.0)).epsilon(1e-15));
        CHECK(split.los >= 0.0);
    }
    CHECK_THROWS_AS((void)rician_power_split(-0.5), DomainError);
}

TEST_CASE("sample_rayleigh_vector: unit mean power and preconditions") {
    RandomStream stream(99, 5);
    const auto v = sample_rayleigh_vector(1'000'000, stream);
    double sum = 0.0;
    for (const auto& g : v)
        sum += std::norm(g);
    CHECK(sum / static_cast<double>(v.size()) == doctest::Approx(1.0).epsilon(0.01));

    RandomStream s1(99, 5), s2(99, 5);
    const auto a = sample_rayleigh_vector(1, s1);
    const auto b = sample_rayleigh_vector(1, s2);
    CHECK(a[0] == b[0]);

    RandomStream s3(1, 1);
    CHECK_THROWS_AS((void)sample_rayleigh_vector(0, s3), DomainError);
}

TEST_CASE("sample_rician_vector: limits and mean power") {
    SUBCASE("K -> infinity collapses onto the line-of-sight component") {
        RandomStream stream(5, 2);
        const auto v = sample_rician_vector(1000, 1e12, stream);
        for (const auto& g : v)
            CHECK(std::abs(g - ComplexGain(1.0, 0.0)) < 1e-5);
    }
    SUBCASE("K = 0 is bit-identical to the Rayleigh sampler on the same stream") {
        RandomStream s1(17, 4), s2(17, 4);
        const auto rician = sample_rician_vector(256, 0.0, s1);
        const auto rayleigh = sample_rayleigh_vector(256, s2);
        for (std::size_t i = 0; i < rician.size(); ++i)
            CHECK(rician[i] == rayleigh[i]);
    }
    SUBCASE("K = 2: unit mean power, mean equal to the LoS amplitude") {
        RandomStream stream(23, 9);
        const auto v = sample_rician_vector(1'000'000, 2.0, stream);
        double sum_pow = 0.0;
        ComplexGain sum(0.0, 0.0);
        for (const auto& g : v) {
            sum_pow += std::norm(g);
            sum += g;
        }
        const double n = static_cast<double>(v.size());
        CHECK(sum_pow / n == doctest::Approx(1.0).epsilon(0.01));
        CHECK(std::abs(sum / n - ComplexGain(std::sqrt(2.0 / 3.0), 0.0)) < 0.01);
    }
    SUBCASE("count precondition") {
        RandomStream s(1, 1);
        CHECK_THROWS_AS((void)sample_rician_vector(0, 1.0, s), DomainError);
    }
}

TEST_CASE("draw_channel_drop: determinism and distinctness") {
    const auto geom = ScenarioGeometry::table2();
    const auto a = draw_channel_drop(geom, 6, 11, 42);
    const auto b = draw_channel_drop(geom, 6, 11, 42);
    const auto c = draw_channel_drop(geom, 6, 12, 42);

    CHECK(a.elements() == 6);
    for (int cell = 0; cell < 2; ++cell) {
        CHECK(a.h_bs_ris[cell] == b.h_bs_ris[cell]);
        for (int u = 0; u < 2; ++u) {
            CHECK(a.w_direct[cell][u] == b.w_direct[cell][u]);
            CHECK(a.w_interf[cell][u] == b.w_interf[cell][u]);
            CHECK(a.r_ris_user[cell][u] == b.r_ris_user[cell][u]);
            CHECK(a.t_ris_user[cell][u] == b.t_ris_user[cell][u]);
        }
    }
    CHECK(a.w_direct[0][0] != c.w_direct[0][0]);
    CHECK(a.h_bs_ris[0] != c.h_bs_ris[0]);
}

TEST_CASE("draw_channel_drop: direct channels have unit mean power across drops") {
    const auto geom = ScenarioGeometry::table2();
    const std::size_t drops = 100'000;
    double sum = 0.0, cross = 0.0;
    for (std::size_t i = 0; i < drops; ++i) {
        const auto drop = draw_channel_drop(geom, 1, i, 7);
        sum += std::norm(drop.w_direct[0][0]);
        // independence spot check between two named channels
        cross += drop.w_direct[0][0].real() * drop.w_interf[0][0].real();
    }
    CHECK(sum / static_cast<double>(drops) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::fabs(cross / static_cast<double>(drops)) < 0.01);
}

TEST_CASE("drop_stream_id: label packing") {
    CHECK(drop_stream_id(0, ChannelKind::direct, 0, 0) == 0);
    CHECK(drop_stream_id(0, ChannelKind::ris_transmit, 1, 1) == 19);
    CHECK(drop_stream_id(1, ChannelKind::direct, 0, 0) == 256);
    // all 18 labels of one drop are distinct
    std::vector<std::uint64_t> ids;
    for (const auto kind : {ChannelKind::direct, ChannelKind::interference,
                            ChannelKind::ris_reflect, ChannelKind::ris_transmit})
        for (int cell = 0; cell < 2; ++cell)
            for (int u = 0; u < 2; ++u)
                ids.push_back(drop_stream_id(3, kind, cell, u));
    for (int cell = 0; cell < 2; ++cell)
        ids.push_back(drop_stream_id(3, ChannelKind::bs_ris, cell));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            CHECK(ids[i] != ids[j]);
    CHECK_THROWS_AS((void)drop_stream_id(1ull << 56, ChannelKind::direct, 0, 0),
                    std::invalid_argument);
}
