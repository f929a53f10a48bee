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

#ifndef STARCOMP_CHANNEL_HPP
#define STARCOMP_CHANNEL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "starcomp/complex_gain.hpp"
#include "starcomp/geometry.hpp"
#include "starcomp/random_stream.hpp"

namespace starcomp {

/// One Monte-Carlo realization of every small-scale channel in the network.
///
/// Index convention: the outer index is the cell (0 or 1), the inner index the
/// user (User::ccu / User::ceu). `t_ris_user[k][u]` is the through-surface
/// link from RIS k to user u of the *opposite* cell; every other container is
/// indexed by the cell the named endpoint belongs to.
struct SmallScaleDrop {
    std::array<std::array<ComplexGain, 2>, 2> w_direct; // BS k -> user of cell k
    std::array<std::array<ComplexGain, 2>, 2> w_interf; // BS (1-k) -> user of cell k
    std::array<std::vector<ComplexGain>, 2> h_bs_ris;   // BS k -> RIS k, Rayleigh
    std::array<std::array<std::vector<ComplexGain>, 2>, 2> r_ris_user; // RIS k -> same side, Rician K1
    std::array<std::array<std::vector<ComplexGain>, 2>, 2> t_ris_user; // RIS k -> other side, Rician K2

    std::size_t elements() const { return h_bs_ris[0].size(); }
};

/// Amplitude-squared weights of the Rician decomposition. los + nlos == 1
/// holds exactly in floating point (nlos = 1/(K+1), los = 1 - nlos).
struct RicianPowerSplit {
    double los;
    double nlos;
};

RicianPowerSplit rician_power_split(double k_factor);

/// Sub-channel labels used to derive one independent random stream per
/// (drop, channel) pair. Layout: kind * 4 + cell * 2 + user.
enum class ChannelKind : std::uint8_t {
    direct = 0,
    interference = 1,
    bs_ris = 2,
    ris_reflect = 3,
    ris_transmit = 4,
};

std::uint64_t drop_stream_id(std::uint64_t drop_index, ChannelKind kind, int cell, int user = 0);

/// i.i.d. circularly-symmetric unit-power complex Gaussians.
/// Throws DomainError when count is zero.
std::vector<ComplexGain> sample_rayleigh_vector(std::size_t count, RandomStream& stream);

/// Rician fading vector: sqrt(K/(K+1)) * 1 + sqrt(1/(K+1)) * g_l with g_l a
/// unit-power complex Gaussian. The line-of-sight component is the
/// deterministic all-ones vector; K = 0 degenerates to Rayleigh (bit-exact
/// for the same stream) and K -> infinity to the all-ones vector.
std::vector<ComplexGain> sample_rician_vector(std::size_t count, double k_factor,
                                              RandomStream& stream);

/// Draws the full set of small-scale channels for one drop. Every channel has
/// its own (drop, label)-derived stream, so drops are reproducible and mutually
/// independent regardless of evaluation order or thread placement.
SmallScaleDrop draw_channel_drop(const ScenarioGeometry& geom, std::size_t elements,
                                 std::uint64_t drop_index, std::uint64_t master_seed);

} // namespace starcomp

#endif
