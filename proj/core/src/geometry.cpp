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

#include "starcomp/geometry.hpp"

#include <cmath>

#include "starcomp/errors.hpp"

namespace starcomp {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be positive and finite");
}

} // namespace

void ScenarioGeometry::validate() const {
    require_positive(d_bs_ccu, "d_bs_ccu");
    require_positive(d_bs_ceu, "d_bs_ceu");
    require_positive(d_bs_ris, "d_bs_ris");
    require_positive(d_ris_ccu, "d_ris_ccu");
    require_positive(d_ris_ceu, "d_ris_ceu");
    require_positive(d_bs_other_ccu, "d_bs_other_ccu");
    require_positive(d_bs_other_ceu, "d_bs_other_ceu");
    require_positive(alpha1, "alpha1");
    require_positive(alpha2, "alpha2");
    require_positive(alpha3_c, "alpha3_c");
    require_positive(alpha3_e, "alpha3_e");
    require_positive(alpha4, "alpha4");
    require_positive(bandwidth_hz, "bandwidth_hz");
    if (rician_k1 < 0.0 || rician_k2 < 0.0)
        throw DomainError("Rician K factors must be non-negative");
    if (!(gamma_c_sq > 0.0) || !(gamma_e_sq > 0.0))
        throw DomainError("power allocation factors must be positive");
    if (std::abs(gamma_c_sq + gamma_e_sq - 1.0) > 1e-9)
        throw DomainError("power allocation factors must sum to 1");
}

std::vector<std::string> ScenarioGeometry::warnings(double exponent_floor) const {
    std::vector<std::string> notes;
    auto check = [&](double v, const char* name) {
        if (v < exponent_floor)
            notes.push_back(std::string(name) + " below free-space exponent " +
                            std::to_string(exponent_floor));
    };
    check(alpha1, "alpha1");
    check(alpha2, "alpha2");
    check(alpha3_c, "alpha3_c");
    check(alpha3_e, "alpha3_e");
    check(alpha4, "alpha4");
    return notes;
}

double path_loss(double distance_m, double exponent) {
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw DomainError("path_loss: distance must be positive");
    if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw DomainError("path_loss: exponent must be positive");
    return std::pow(distance_m, -exponent);
}

LargeScale large_scale_from_geometry(const ScenarioGeometry& geom) {
    geom.validate();
    LargeScale ls;
    const double bs_ris = path_loss(geom.d_bs_ris, geom.alpha2);

    ls.eps_direct[index(User::ccu)] = path_loss(geom.d_bs_ccu, geom.alpha1);
    ls.eps_direct[index(User::ceu)] = path_loss(geom.d_bs_ceu, geom.alpha1);

    ls.eps_interf[index(User::ccu)] = path_loss(geom.d_bs_other_ccu, geom.alpha4);
    ls.eps_interf[index(User::ceu)] = path_loss(geom.d_bs_other_ceu, geom.alpha4);

    // Same-side reflection and through-surface transmission share the
    // RIS-user legs because the surfaces are co-located at the boundary.
    ls.eps_reflect[index(User::ccu)] = bs_ris * path_loss(geom.d_ris_ccu, geom.alpha3_c);
    ls.eps_reflect[index(User::ceu)] = bs_ris * path_loss(geom.d_ris_ceu, geom.alpha3_e);
    ls.eps_transmit[index(User::ccu)] = bs_ris * path_loss(geom.d_ris_ccu, geom.alpha3_c);
    ls.eps_transmit[index(User::ceu)] = bs_ris * path_loss(geom.d_ris_ceu, geom.alpha3_e);
    return ls;
}

} // namespace starcomp
