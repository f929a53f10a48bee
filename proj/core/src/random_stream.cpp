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

#include "starcomp/random_stream.hpp"

#include <cmath>

namespace starcomp {

namespace {

// SplitMix64 step. Used only to expand (master_seed, stream_id) into the
// 256-bit xoshiro state.
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

} // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id) {
    // Two mixing rounds decorrelate nearby (seed, stream) pairs before the
    // state words are drawn.
    std::uint64_t x = master_seed;
    std::uint64_t h = splitmix64(x);
    x = h ^ (stream_id * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull);
    for (auto& word : state_)
        word = splitmix64(x);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
        state_[0] = 0x9E3779B97F4A7C15ull; // xoshiro must not start all-zero
}

std::uint64_t RandomStream::next_u64() {
    // xoshiro256++ (Blackman & Vigna, public domain reference sequence)
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

ComplexGain sample_standard_complex_gaussian(RandomStream& stream) {
    // Polar form: magnitude^2 = -log(u1) ~ Exp(1), phase uniform. This is the
    // Box-Muller pair scaled to variance 1/2 per component.
    const double u1 = stream.next_unit_open();
    const double u2 = stream.next_unit();
    const double radius = std::sqrt(-std::log(u1));
    const double angle = two_pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace starcomp
