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

#include "starcomp/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "starcomp/errors.hpp"

namespace starcomp {

RicianPowerSplit rician_power_split(double k_factor) {
    if (k_factor < 0.0 || !std::isfinite(k_factor))
        throw DomainError("rician_power_split: K factor must be non-negative and finite");
    const double nlos = 1.0 / (k_factor + 1.0);
    return {1.0 - nlos, nlos};
}

std::uint64_t drop_stream_id(std::uint64_t drop_index, ChannelKind kind, int cell, int user) {
    // 8 bits of label space; the drop index occupies the upper 56 bits.
    if (drop_index >= (1ull << 56))
        throw std::invalid_argument("drop_stream_id: drop index exceeds 2^56");
    const std::uint64_t label =
        static_cast<std::uint64_t>(kind) * 4 + static_cast<std::uint64_t>(cell) * 2 +
        static_cast<std::uint64_t>(user);
    return (drop_index << 8) | label;
}

std::vector<ComplexGain> sample_rayleigh_vector(std::size_t count, RandomStream& stream) {
    if (count == 0)
        throw DomainError("sample_rayleigh_vector: count must be >= 1");
    std::vector<ComplexGain> v(count);
    for (auto& g : v)
        g = sample_standard_complex_gaussian(stream);
    return v;
}

std::vector<ComplexGain> sample_rician_vector(std::size_t count, double k_factor,
                                              RandomStream& stream) {
    if (count == 0)
        throw DomainError("sample_rician_vector: count must be >= 1");
    const RicianPowerSplit split = rician_power_split(k_factor);
    const double w_los = std::sqrt(split.los);
    const double w_nlos = std::sqrt(split.nlos);
    std::vector<ComplexGain> v(count);
    for (auto& g : v)
        g = w_los + w_nlos * sample_standard_complex_gaussian(stream);
    return v;
}

SmallScaleDrop draw_channel_drop(const ScenarioGeometry& geom, std::size_t elements,
                                 std::uint64_t drop_index, std::uint64_t master_seed) {
    if (elements == 0)
        throw DomainError("draw_channel_drop: element count must be >= 1");

    auto stream = [&](ChannelKind kind, int cell, int user = 0) {
        return RandomStream(master_seed, drop_stream_id(drop_index, kind, cell, user));
    };

    SmallScaleDrop drop;
    for (int cell = 0; cell < 2; ++cell) {
        for (int user = 0; user < 2; ++user) {
            auto s_direct = stream(ChannelKind::direct, cell, user);
            drop.w_direct[cell][user] = sample_standard_complex_gaussian(s_direct);
            auto s_interf = stream(ChannelKind::interference, cell, user);
            drop.w_interf[cell][user] = sample_standard_complex_gaussian(s_interf);
        }

        auto s_bs_ris = stream(ChannelKind::bs_ris, cell);
        drop.h_bs_ris[cell] = sample_rayleigh_vector(elements, s_bs_ris);

        for (int user = 0; user < 2; ++user) {
            auto s_reflect = stream(ChannelKind::ris_reflect, cell, user);
            drop.r_ris_user[cell][user] =
                sample_rician_vector(elements, geom.rician_k1, s_reflect);
            auto s_transmit = stream(ChannelKind::ris_transmit, cell, user);
            drop.t_ris_user[cell][user] =
                sample_rician_vector(elements, geom.rician_k2, s_transmit);
        }
    }
    return drop;
}

} // namespace starcomp
