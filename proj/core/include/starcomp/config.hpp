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

#ifndef STARCOMP_CONFIG_HPP
#define STARCOMP_CONFIG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "starcomp/experiment.hpp"
#include "starcomp/geometry.hpp"

namespace starcomp {

enum class OutputFormat { csv, json };

/// rates: Monte-Carlo rate sweep over (design, elements, power).
/// min_elements_grid: analytic minimal-element evaluation over exponent grids.
enum class RunMode { rates, min_elements_grid };

/// A fully resolved run: scenario, sweep axes and output destination.
/// Defaults reproduce the reference scenario with a single SSECB point.
struct RunConfig {
    ScenarioGeometry geometry;
    std::vector<DesignKind> designs = {DesignKind::ssecb};
    std::vector<int> elements = {54};
    std::vector<double> power_dbm = {-30.0};
    RunMode mode = RunMode::rates;
    ExponentGrids grids;
    std::uint64_t drops = 10000;
    std::uint64_t seed = 42;
    std::string out_path = "-"; // "-" = stdout
    OutputFormat format = OutputFormat::csv;

    bool operator==(const RunConfig&) const = default;
};

/// Parses the flat `key = value` config format ('#' starts a comment, blank
/// lines ignored, later assignments win, a `preset` line expands in place and
/// resets everything before it). An empty document yields `base` unchanged
/// (the defaults, unless the caller layers documents). Throws ConfigError
/// carrying the offending line number for malformed lines and unknown keys,
/// and a line-less ConfigError for cross-key violations (e.g. a power split
/// that does not sum to one).
RunConfig parse_config(std::string_view text, const RunConfig& base = RunConfig{});

/// Applies one of the bundled presets: table2, fig2, fig3, fig4.
/// Throws ConfigError for unknown names.
void apply_preset(RunConfig& config, std::string_view name);

/// Canonical config document for the given run; parse_config round-trips it
/// to an identical RunConfig (doubles are emitted with round-trip precision).
std::string serialize_config(const RunConfig& config);

const char* to_string(OutputFormat format);
const char* to_string(RunMode mode);

} // namespace starcomp

#endif
