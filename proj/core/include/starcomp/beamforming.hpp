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

#ifndef STARCOMP_BEAMFORMING_HPP
#define STARCOMP_BEAMFORMING_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "starcomp/channel.hpp"
#include "starcomp/least_norm.hpp"

namespace starcomp {

/// Passive beamforming strategies.
///   ssecb   - transmission cancels the opposite cell's interference while the
///             reflection co-phases onto the same-side CCU
///   seb_ccu - reflection-only enhancement focused on the CCU
///   seb_ceu - reflection-only enhancement focused on the CEU
///   scb     - transmission-only interference cancellation, reflection off
///   none    - surfaces disabled (direct links only)
enum class DesignKind { ssecb, seb_ccu, seb_ceu, scb, none };

const char* to_string(DesignKind kind);
std::optional<DesignKind> design_from_string(std::string_view name);

/// Per-element configuration of one surface: transmit/reflect amplitudes in
/// [0, 1] and phase shifts in [0, 2*pi). Every shipped design keeps
/// beta_t^2 + beta_r^2 <= 1 per element; the enhancement designs hold it with
/// equality.
struct StarRisConfig {
    std::vector<double> beta_t;
    std::vector<double> theta_t;
    std::vector<double> beta_r;
    std::vector<double> theta_r;

    std::size_t elements() const { return beta_t.size(); }

    static StarRisConfig zeros(std::size_t elements);
};

/// Result of one transmission-coefficient solve.
///
/// `coefficients` are the per-element complex weights beta_t * e^{j theta_t}.
/// When the least-norm solution respects the unit amplitude budget the solve
/// is feasible and scale == 1. Otherwise the whole vector is scaled down
/// uniformly so the largest magnitude is 1; scale < 1 then measures the
/// attainable fraction of the target and (1 - scale) * target remains as
/// residual interference.
struct CancellationOutcome {
    std::vector<ComplexGain> coefficients;
    double scale = 1.0;
    bool feasible = true;
    std::vector<ComplexGain> target;
};

/// The wide linear system one surface must solve to null the interference at
/// the two users of the victim cell.
struct CancellationSystem {
    ComplexMatrix h_eff;             // row u, column l: h_bs_ris[l] * t_ris_user[u][l]
    std::vector<ComplexGain> target; // -sqrt(eps_interf/eps_transmit) * w_interf per user
};

/// Builds the cancellation system solved by the RIS of `source_cell` for the
/// benefit of the opposite cell's (CCU, CEU) pair.
CancellationSystem build_cancellation_system(const SmallScaleDrop& drop, const LargeScale& ls,
                                             int source_cell);

/// Least-norm transmission solve with the amplitude-budget cap applied.
/// Scaled coefficients satisfy system * coefficients = scale * target to
/// solver precision. Propagates SingularSystem.
CancellationOutcome solve_transmission(const ComplexMatrix& system,
                                       std::span<const ComplexGain> target,
                                       double condition_cap = 1e12);

/// beta_r[l] = sqrt(1 - beta_t[l]^2): the energy split held with equality.
/// Throws DomainError when any amplitude is outside [0, 1].
std::vector<double> derive_reflection_amplitudes(std::span<const double> beta_t);

/// Reflection phase shifts that align every BS-RIS-user path with the direct
/// path of the focus user, making the received components add coherently.
std::vector<double> cophase_reflection(const SmallScaleDrop& drop, int cell, User focus_user);

/// A complete two-surface configuration plus the solve diagnostics of the
/// designs that perform cancellation (indexed by the transmitting surface).
struct RisDesign {
    DesignKind kind = DesignKind::none;
    std::array<StarRisConfig, 2> configs;
    std::array<std::optional<CancellationOutcome>, 2> cancellation;

    /// True when every cancellation solve in the design met the amplitude
    /// budget (vacuously true for designs without a solve).
    bool feasible() const;
};

/// The joint design: for each surface, transmission coefficients from the
/// cancellation solve against the opposite cell's users, reflection
/// amplitudes from the energy split, reflection phases co-phased at the
/// same-side CCU. Requires at least two elements; propagates SingularSystem.
RisDesign design_ssecb(const SmallScaleDrop& drop, const LargeScale& ls);

/// The benchmark configurations (kind must not be ssecb).
RisDesign design_baseline(DesignKind kind, const SmallScaleDrop& drop, const LargeScale& ls);

/// Dispatches to design_ssecb or design_baseline.
RisDesign make_design(DesignKind kind, const SmallScaleDrop& drop, const LargeScale& ls);

} // namespace starcomp

#endif
