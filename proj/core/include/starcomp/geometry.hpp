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

#ifndef STARCOMP_GEOMETRY_HPP
#define STARCOMP_GEOMETRY_HPP

#include <array>
#include <string>
#include <vector>

namespace starcomp {

/// NOMA user roles inside one cell. Used as index 0/1 throughout.
enum class User : int { ccu = 0, ceu = 1 };

inline constexpr std::array<User, 2> both_users = {User::ccu, User::ceu};

constexpr int index(User u) { return static_cast<int>(u); }

constexpr const char* to_string(User u) { return u == User::ccu ? "ccu" : "ceu"; }

/// Fixed deployment of the two-cell network. The two cells are mirror images,
/// so one record describes both: every distance is quoted for cell 1 and
/// applies symmetrically to cell 2. The surfaces sit at the cell intersection,
/// so RIS-to-user distances are the same seen from either surface.
///
/// Default values are the reference urban scenario used by the bundled
/// presets and the acceptance suite.
struct ScenarioGeometry {
    // distances [m]
    double d_bs_ccu = 30.0;       // serving BS -> own CCU
    double d_bs_ceu = 60.0;       // serving BS -> own CEU
    double d_bs_ris = 70.0;       // BS -> its grouped RIS
    double d_ris_ccu = 50.0;      // RIS -> CCU (either side)
    double d_ris_ceu = 15.0;      // RIS -> CEU (either side)
    double d_bs_other_ccu = 120.0; // interfering BS -> other-cell CCU
    double d_bs_other_ceu = 90.0;  // interfering BS -> other-cell CEU

    // path-loss exponents
    double alpha1 = 3.0;   // BS-user links
    double alpha2 = 3.0;   // BS-RIS links
    double alpha3_c = 2.7; // RIS-CCU links
    double alpha3_e = 2.4; // RIS-CEU links
    double alpha4 = 3.5;   // inter-cell interference links

    // small-scale fading parameters
    double rician_k1 = 2.0; // RIS-user reflection links
    double rician_k2 = 3.0; // RIS-user through-surface links

    double bandwidth_hz = 1e6;

    // NOMA power split; the CEU takes the larger share
    double gamma_c_sq = 0.4;
    double gamma_e_sq = 0.6;

    static ScenarioGeometry table2() { return {}; }

    /// Throws DomainError on hard violations (non-positive distances or
    /// exponents, negative K factors, power split not summing to one).
    void validate() const;

    /// Non-fatal oddities, e.g. path-loss exponents below free space.
    std::vector<std::string> warnings(double exponent_floor = 2.0) const;

    bool operator==(const ScenarioGeometry&) const = default;
};

/// Large-scale power gains per user, shared by both (symmetric) cells.
struct LargeScale {
    std::array<double, 2> eps_direct;   // BS -> own user
    std::array<double, 2> eps_interf;   // other BS -> user
    std::array<double, 2> eps_reflect;  // BS -> RIS -> same-side user
    std::array<double, 2> eps_transmit; // BS -> RIS -> other-side user

    double direct(User u) const { return eps_direct[index(u)]; }
    double interf(User u) const { return eps_interf[index(u)]; }
    double reflect(User u) const { return eps_reflect[index(u)]; }
    double transmit(User u) const { return eps_transmit[index(u)]; }
};

/// d^(-alpha). Throws DomainError unless d > 0 and alpha > 0.
double path_loss(double distance_m, double exponent);

/// Evaluates every large-scale gain of the scenario. Cascaded RIS links are
/// products of the BS-RIS and RIS-user power laws; the CCU leg uses alpha3_c,
/// the CEU leg alpha3_e.
LargeScale large_scale_from_geometry(const ScenarioGeometry& geom);

} // namespace starcomp

#endif
