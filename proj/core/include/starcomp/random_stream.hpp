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

#ifndef STARCOMP_RANDOM_STREAM_HPP
#define STARCOMP_RANDOM_STREAM_HPP

#include <array>
#include <cstdint>

#include "starcomp/complex_gain.hpp"

namespace starcomp {

/// Counter-derived random stream (xoshiro256++ seeded from a SplitMix64 hash
/// of master seed and stream id).
///
/// Identical (master_seed, stream_id) pairs reproduce the identical sample
/// sequence bit for bit, independently of which thread draws it or in which
/// order streams are created. Distinct stream ids give statistically
/// independent sequences, so every (drop, channel) substream of a Monte-Carlo
/// run can be regenerated in isolation.
class RandomStream {
  public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53-bit resolution.
    double next_unit();

    /// Uniform on (0, 1]; safe to feed into log().
    double next_unit_open();

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::array<std::uint64_t, 4> state_;
};

/// One circularly-symmetric complex Gaussian with unit mean power:
/// real and imaginary parts are independent N(0, 1/2), so the squared
/// magnitude is exactly Exp(1). Consumes two uniforms per call.
ComplexGain sample_standard_complex_gaussian(RandomStream& stream);

} // namespace starcomp

#endif
