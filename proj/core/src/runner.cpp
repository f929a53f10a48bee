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

#include "starcomp/runner.hpp"

#include <iostream>

#include "starcomp/errors.hpp"
#include "starcomp/results.hpp"

namespace starcomp {

int run(const RunConfig& config) {
    try {
        for (const auto& note : config.geometry.warnings())
            std::cerr << "warning: " << note << '\n';

        SweepResult combined;
        if (config.mode == RunMode::min_elements_grid) {
            if (config.grids.alpha3.empty())
                throw ConfigError("min_elements_grid mode requires alpha3_grid");
            SweepSpec spec;
            spec.exponent_overrides = config.grids;
            spec.drops = config.drops;
            spec.master_seed = config.seed;
            combined = sweep(spec, config.geometry);
        } else {
            for (const DesignKind design : config.designs) {
                SweepSpec spec;
                spec.design = design;
                spec.elements = config.elements;
                spec.power_dbm = config.power_dbm;
                spec.drops = config.drops;
                spec.master_seed = config.seed;
                SweepResult part = sweep(spec, config.geometry);
                combined.points.insert(combined.points.end(), part.points.begin(),
                                       part.points.end());
            }
        }
        emit_results(combined, config.format, config.out_path);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace starcomp
