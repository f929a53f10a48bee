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

#ifndef STARCOMP_LINK_HPP
#define STARCOMP_LINK_HPP

#include "starcomp/beamforming.hpp"
#include "starcomp/channel.hpp"

namespace starcomp {

/// NOMA power split between the paired users. The CEU takes the larger share
/// so the CCU can decode and cancel its signal first.
struct PowerAllocation {
    double gamma_c_sq = 0.4;
    double gamma_e_sq = 0.6;

    /// Throws DomainError unless both factors are in (0,1), sum to 1 and the
    /// CEU share is strictly larger.
    void validate() const;

    static PowerAllocation from_geometry(const ScenarioGeometry& geom) {
        return {geom.gamma_c_sq, geom.gamma_e_sq};
    }
};

/// Instantaneous per-drop link quality for the users of one cell.
/// rate_sic is the CCU's rate when decoding the CEU signal, reported as a
/// diagnostic only.
struct RateReport {
    double rate_ccu = 0.0;  // bit/s/Hz
    double rate_ceu = 0.0;  // bit/s/Hz
    double rate_sic = 0.0;  // bit/s/Hz
    double snr_ccu = 0.0;
    double sinr_ceu = 0.0;
    double sinr_sic = 0.0;
};

/// Both complex amplitudes a receiver sees after the surfaces are applied.
/// With every surface disabled, g_residual is exactly the direct
/// interfering-path term.
struct EffectiveLink {
    ComplexGain h_desired;
    ComplexGain g_residual;
};

/// Composite desired channel of one user: co-phased (or superposed) reflected
/// paths through the own-cell surface plus the direct path, as one complex
/// amplitude.
ComplexGain effective_desired_channel(User u, const SmallScaleDrop& drop,
                                      const std::array<StarRisConfig, 2>& configs,
                                      const LargeScale& ls, int cell = 0);

/// Inter-cell interference left after the opposite surface's transmission:
/// direct interfering path plus the through-surface recombination.
ComplexGain residual_interference(User u, const SmallScaleDrop& drop,
                                  const std::array<StarRisConfig, 2>& configs,
                                  const LargeScale& ls, int cell = 0);

EffectiveLink effective_link(User u, const SmallScaleDrop& drop,
                             const std::array<StarRisConfig, 2>& configs, const LargeScale& ls,
                             int cell = 0);

// SINR/SNR of the NOMA detection steps, generalized with the residual
// interference power g_pow in every denominator; g_pow = 0 recovers the
// interference-free expressions exactly.

/// CEU decoding its own signal (intra-cell NOMA interference from the CCU
/// share stays in the denominator).
double sinr_ceu(double h_pow, double g_pow, double p_mw, const PowerAllocation& alloc,
                double noise_mw);

/// CCU decoding the CEU signal prior to cancellation (same expression as
/// sinr_ceu evaluated with the CCU channel).
double sinr_sic(double h_pow, double g_pow, double p_mw, const PowerAllocation& alloc,
                double noise_mw);

/// CCU decoding its own signal after SIC removed the CEU share.
double snr_ccu(double h_pow, double g_pow, double p_mw, const PowerAllocation& alloc,
               double noise_mw);

/// log2(1 + SINR) rates of both users of `cell` for one drop and one surface
/// configuration.
RateReport instantaneous_rates(const SmallScaleDrop& drop,
                               const std::array<StarRisConfig, 2>& configs,
                               const LargeScale& ls, double p_mw, const PowerAllocation& alloc,
                               double noise_mw, int cell = 0);

} // namespace starcomp

#endif
