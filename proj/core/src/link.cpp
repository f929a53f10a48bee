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

#include "starcomp/link.hpp"

#include <cmath>
#include <stdexcept>

#include "starcomp/errors.hpp"

namespace starcomp {

void PowerAllocation::validate() const {
    if (!(gamma_c_sq > 0.0 && gamma_c_sq < 1.0) || !(gamma_e_sq > 0.0 && gamma_e_sq < 1.0))
        throw DomainError("power allocation factors must lie in (0, 1)");
    if (std::abs(gamma_c_sq + gamma_e_sq - 1.0) > 1e-9)
        throw DomainError("power allocation factors must sum to 1");
    if (!(gamma_e_sq > gamma_c_sq))
        throw DomainError("NOMA ordering requires gamma_e_sq > gamma_c_sq");
}

ComplexGain effective_desired_channel(User u, const SmallScaleDrop& drop,
                                      const std::array<StarRisConfig, 2>& configs,
                                      const LargeScale& ls, int cell) {
    if (cell != 0 && cell != 1)
        throw std::invalid_argument("effective_desired_channel: cell must be 0 or 1");
    const int ui = index(u);
    const StarRisConfig& own = configs[cell];
    const std::size_t n = drop.elements();

    ComplexGain reflected(0.0, 0.0);
    for (std::size_t l = 0; l < n; ++l)
        reflected += drop.h_bs_ris[cell][l] * drop.r_ris_user[cell][ui][l] * own.beta_r[l] *
                     unit_phasor(own.theta_r[l]);

    return std::sqrt(ls.eps_reflect[ui]) * reflected +
           std::sqrt(ls.eps_direct[ui]) * drop.w_direct[cell][ui];
}

ComplexGain residual_interference(User u, const SmallScaleDrop& drop,
                                  const std::array<StarRisConfig, 2>& configs,
                                  const LargeScale& ls, int cell) {
    if (cell != 0 && cell != 1)
        throw std::invalid_argument("residual_interference: cell must be 0 or 1");
    const int ui = index(u);
    const int other = 1 - cell;
    const StarRisConfig& far = configs[other];
    const std::size_t n = drop.elements();

    // Through-surface recombination of the interfering BS signal at this user.
    ComplexGain through(0.0, 0.0);
    for (std::size_t l = 0; l < n; ++l)
        through += drop.h_bs_ris[other][l] * drop.t_ris_user[other][ui][l] * far.beta_t[l] *
                   unit_phasor(far.theta_t[l]);

    return std::sqrt(ls.eps_interf[ui]) * drop.w_interf[cell][ui] +
           std::sqrt(ls.eps_transmit[ui]) * through;
}

double sinr_ceu(double h_pow, double g_pow, double p_mw, const PowerAllocation& alloc,
                double noise_mw) {
    const double desired = h_pow * p_mw;
    return desired * alloc.gamma_e_sq / (desired * alloc.gamma_c_sq + g_pow * p_mw + noise_mw);
}

double sinr_sic(double h_pow, double g_pow, double p_mw, const PowerAllocation& alloc,
                double noise_mw) {
    return sinr_ceu(h_pow, g_pow, p_mw, alloc, noise_mw);
}

double snr_ccu(double h_pow, double g_pow, double p_mw, const PowerAllocation& alloc,
               double noise_mw) {
    return h_pow * p_mw * alloc.gamma_c_sq / (g_pow * p_mw + noise_mw);
}

EffectiveLink effective_link(User u, const SmallScaleDrop& drop,
                             const std::array<StarRisConfig, 2>& configs, const LargeScale& ls,
                             int cell) {
    return {effective_desired_channel(u, drop, configs, ls, cell),
            residual_interference(u, drop, configs, ls, cell)};
}

RateReport instantaneous_rates(const SmallScaleDrop& drop,
                               const std::array<StarRisConfig, 2>& configs,
                               const LargeScale& ls, double p_mw, const PowerAllocation& alloc,
                               double noise_mw, int cell) {
    const EffectiveLink ccu = effective_link(User::ccu, drop, configs, ls, cell);
    const EffectiveLink ceu = effective_link(User::ceu, drop, configs, ls, cell);
    const double h_ccu = std::norm(ccu.h_desired);
    const double h_ceu = std::norm(ceu.h_desired);
    const double g_ccu = std::norm(ccu.g_residual);
    const double g_ceu = std::norm(ceu.g_residual);

    RateReport report;
    report.snr_ccu = snr_ccu(h_ccu, g_ccu, p_mw, alloc, noise_mw);
    report.sinr_ceu = sinr_ceu(h_ceu, g_ceu, p_mw, alloc, noise_mw);
    report.sinr_sic = sinr_sic(h_ccu, g_ccu, p_mw, alloc, noise_mw);
    report.rate_ccu = std::log2(1.0 + report.snr_ccu);
    report.rate_ceu = std::log2(1.0 + report.sinr_ceu);
    report.rate_sic = std::log2(1.0 + report.sinr_sic);
    return report;
}

} // namespace starcomp
