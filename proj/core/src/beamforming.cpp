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

#include "starcomp/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "starcomp/errors.hpp"

namespace starcomp {

const char* to_string(DesignKind kind) {
    switch (kind) {
    case DesignKind::ssecb: return "ssecb";
    case DesignKind::seb_ccu: return "seb-ccu";
    case DesignKind::seb_ceu: return "seb-ceu";
    case DesignKind::scb: return "scb";
    case DesignKind::none: return "none";
    }
    return "?";
}

std::optional<DesignKind> design_from_string(std::string_view name) {
    if (name == "ssecb") return DesignKind::ssecb;
    if (name == "seb-ccu") return DesignKind::seb_ccu;
    if (name == "seb-ceu") return DesignKind::seb_ceu;
    if (name == "scb") return DesignKind::scb;
    if (name == "none") return DesignKind::none;
    return std::nullopt;
}

StarRisConfig StarRisConfig::zeros(std::size_t elements) {
    StarRisConfig c;
    c.beta_t.assign(elements, 0.0);
    c.theta_t.assign(elements, 0.0);
    c.beta_r.assign(elements, 0.0);
    c.theta_r.assign(elements, 0.0);
    return c;
}

CancellationSystem build_cancellation_system(const SmallScaleDrop& drop, const LargeScale& ls,
                                             int source_cell) {
    if (source_cell != 0 && source_cell != 1)
        throw std::invalid_argument("build_cancellation_system: cell must be 0 or 1");
    const int victim_cell = 1 - source_cell;
    const std::size_t n = drop.elements();

    CancellationSystem sys{ComplexMatrix(2, n), std::vector<ComplexGain>(2)};
    for (int u = 0; u < 2; ++u) {
        // Effective through-surface channel: BS -> RIS hop times RIS -> victim hop.
        for (std::size_t l = 0; l < n; ++l)
            sys.h_eff.at(u, l) = drop.h_bs_ris[source_cell][l] * drop.t_ris_user[source_cell][u][l];
        // The transmission must build the interfering signal with opposite
        // sign, normalized to the through-surface large-scale gain.
        sys.target[u] = -std::sqrt(ls.eps_interf[u] / ls.eps_transmit[u]) *
                        drop.w_interf[victim_cell][u];
    }
    return sys;
}

CancellationOutcome solve_transmission(const ComplexMatrix& system,
                                       std::span<const ComplexGain> target,
                                       double condition_cap) {
    if (system.cols() < 2)
        throw std::invalid_argument("solve_transmission: needs at least two elements");

    CancellationOutcome out;
    out.target.assign(target.begin(), target.end());
    out.coefficients = least_norm_solve(system, target, condition_cap);

    double max_mag = 0.0;
    for (const auto& c : out.coefficients)
        max_mag = std::max(max_mag, std::abs(c));

    if (max_mag <= 1.0) {
        out.scale = 1.0;
        out.feasible = true;
        return out;
    }

    // Amplitude budget violated: scale the whole vector so the largest entry
    // sits on the unit circle. This keeps the cancellation phase structure
    // and leaves (1 - scale) * target as residual.
    out.scale = 1.0 / max_mag;
    out.feasible = false;
    for (auto& c : out.coefficients) {
        c *= out.scale;
        const double mag = std::abs(c);
        if (mag > 1.0) // guard the cap against rounding of the division
            c /= mag;
    }
    return out;
}

std::vector<double> derive_reflection_amplitudes(std::span<const double> beta_t) {
    std::vector<double> beta_r(beta_t.size());
    for (std::size_t l = 0; l < beta_t.size(); ++l) {
        const double bt = beta_t[l];
        if (!(bt >= 0.0 && bt <= 1.0))
            throw DomainError("derive_reflection_amplitudes: amplitude outside [0, 1]");
        beta_r[l] = std::sqrt(1.0 - bt * bt);
    }
    return beta_r;
}

std::vector<double> cophase_reflection(const SmallScaleDrop& drop, int cell, User focus_user) {
    if (cell != 0 && cell != 1)
        throw std::invalid_argument("cophase_reflection: cell must be 0 or 1");
    const int u = index(focus_user);
    const double target_phase = phase_2pi(drop.w_direct[cell][u]);
    const std::size_t n = drop.elements();
    std::vector<double> theta(n);
    for (std::size_t l = 0; l < n; ++l) {
        const ComplexGain path = drop.h_bs_ris[cell][l] * drop.r_ris_user[cell][u][l];
        theta[l] = cophase_angle(target_phase, phase_2pi(path));
    }
    return theta;
}

bool RisDesign::feasible() const {
    for (const auto& outcome : cancellation)
        if (outcome && !outcome->feasible)
            return false;
    return true;
}

namespace {

// Transmission side of one surface from a cancellation outcome.
void apply_transmission(StarRisConfig& config, const CancellationOutcome& outcome) {
    const std::size_t n = outcome.coefficients.size();
    config.beta_t.resize(n);
    config.theta_t.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
        config.beta_t[l] = std::min(std::abs(outcome.coefficients[l]), 1.0);
        config.theta_t[l] = phase_2pi(outcome.coefficients[l]);
    }
}

} // namespace

RisDesign design_ssecb(const SmallScaleDrop& drop, const LargeScale& ls) {
    RisDesign design;
    design.kind = DesignKind::ssecb;
    for (int cell = 0; cell < 2; ++cell) {
        const CancellationSystem sys = build_cancellation_system(drop, ls, cell);
        const CancellationOutcome outcome = solve_transmission(sys.h_eff, sys.target);

        StarRisConfig& config = design.configs[cell];
        apply_transmission(config, outcome);
        config.beta_r = derive_reflection_amplitudes(config.beta_t);
        config.theta_r = cophase_reflection(drop, cell, User::ccu);
        design.cancellation[cell] = outcome;
    }
    return design;
}

RisDesign design_baseline(DesignKind kind, const SmallScaleDrop& drop, const LargeScale& ls) {
    if (kind == DesignKind::ssecb)
        throw std::invalid_argument("design_baseline: use design_ssecb for the joint design");

    const std::size_t n = drop.elements();
    RisDesign design;
    design.kind = kind;
    for (int cell = 0; cell < 2; ++cell) {
        StarRisConfig config = StarRisConfig::zeros(n);
        switch (kind) {
        case DesignKind::seb_ccu:
        case DesignKind::seb_ceu: {
            const User focus = kind == DesignKind::seb_ccu ? User::ccu : User::ceu;
            config.beta_r.assign(n, 1.0);
            config.theta_r = cophase_reflection(drop, cell, focus);
            break;
        }
        case DesignKind::scb: {
            // Cancellation only; the reflection side stays dark.
            const CancellationSystem sys = build_cancellation_system(drop, ls, cell);
            const CancellationOutcome outcome = solve_transmission(sys.h_eff, sys.target);
            apply_transmission(config, outcome);
            design.cancellation[cell] = outcome;
            break;
        }
        case DesignKind::none:
            break;
        case DesignKind::ssecb:
            break; // unreachable
        }
        design.configs[cell] = std::move(config);
    }
    return design;
}

RisDesign make_design(DesignKind kind, const SmallScaleDrop& drop, const LargeScale& ls) {
    return kind == DesignKind::ssecb ? design_ssecb(drop, ls) : design_baseline(kind, drop, ls);
}

} // namespace starcomp
