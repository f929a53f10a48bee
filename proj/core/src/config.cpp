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

#include "starcomp/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "starcomp/errors.hpp"

namespace starcomp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view v, int line) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("not a number: '" + std::string(v) + "'", line);
    return out;
}

std::uint64_t parse_u64(std::string_view v, int line) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("not a non-negative integer: '" + std::string(v) + "'", line);
    return out;
}

std::vector<std::string_view> split(std::string_view v, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = v.find(sep);
        if (pos == std::string_view::npos) {
            parts.push_back(trim(v));
            return parts;
        }
        parts.push_back(trim(v.substr(0, pos)));
        v.remove_prefix(pos + 1);
    }
}

// Either "a,b,c" or an inclusive range "start:stop:step".
std::vector<double> parse_double_list(std::string_view v, int line) {
    if (v.find(':') != std::string_view::npos) {
        const auto parts = split(v, ':');
        if (parts.size() != 3)
            throw ConfigError("range must be start:stop:step", line);
        const double start = parse_double(parts[0], line);
        const double stop = parse_double(parts[1], line);
        const double step = parse_double(parts[2], line);
        if (step == 0.0 || (stop - start) * step < 0.0)
            throw ConfigError("range step must advance start towards stop", line);
        const double n_steps = std::floor((stop - start) / step + 1e-9);
        if (!(n_steps < 1e6))
            throw ConfigError("range produces too many values", line);
        std::vector<double> values;
        for (double i = 0.0; i <= n_steps; i += 1.0)
            values.push_back(start + i * step);
        return values;
    }
    std::vector<double> values;
    for (const auto part : split(v, ','))
        values.push_back(parse_double(part, line));
    return values;
}

std::vector<int> parse_int_list(std::string_view v, int line) {
    std::vector<int> values;
    for (const double d : parse_double_list(v, line)) {
        if (d != std::floor(d))
            throw ConfigError("expected integers: '" + std::string(v) + "'", line);
        values.push_back(static_cast<int>(d));
    }
    return values;
}

std::vector<DesignKind> parse_design_list(std::string_view v, int line) {
    std::vector<DesignKind> designs;
    for (const auto part : split(v, ',')) {
        const auto kind = design_from_string(part);
        if (!kind)
            throw ConfigError("unknown design '" + std::string(part) + "'", line);
        designs.push_back(*kind);
    }
    return designs;
}

void apply_key(RunConfig& c, std::string_view key, std::string_view value, int line) {
    ScenarioGeometry& g = c.geometry;
    if (key == "preset") {
        try {
            apply_preset(c, value);
        } catch (const ConfigError& e) {
            throw ConfigError(e.what(), line);
        }
    } else if (key == "d_bs_ccu") g.d_bs_ccu = parse_double(value, line);
    else if (key == "d_bs_ceu") g.d_bs_ceu = parse_double(value, line);
    else if (key == "d_bs_ris") g.d_bs_ris = parse_double(value, line);
    else if (key == "d_ris_ccu") g.d_ris_ccu = parse_double(value, line);
    else if (key == "d_ris_ceu") g.d_ris_ceu = parse_double(value, line);
    else if (key == "d_bs_other_ccu") g.d_bs_other_ccu = parse_double(value, line);
    else if (key == "d_bs_other_ceu") g.d_bs_other_ceu = parse_double(value, line);
    else if (key == "alpha1") g.alpha1 = parse_double(value, line);
    else if (key == "alpha2") g.alpha2 = parse_double(value, line);
    else if (key == "alpha3_c") g.alpha3_c = parse_double(value, line);
    else if (key == "alpha3_e") g.alpha3_e = parse_double(value, line);
    else if (key == "alpha4") g.alpha4 = parse_double(value, line);
    else if (key == "k1") g.rician_k1 = parse_double(value, line);
    else if (key == "k2") g.rician_k2 = parse_double(value, line);
    else if (key == "bandwidth_hz") g.bandwidth_hz = parse_double(value, line);
    else if (key == "gamma_c_sq") g.gamma_c_sq = parse_double(value, line);
    else if (key == "gamma_e_sq") g.gamma_e_sq = parse_double(value, line);
    else if (key == "design") c.designs = parse_design_list(value, line);
    else if (key == "elements") c.elements = parse_int_list(value, line);
    else if (key == "power_dbm") c.power_dbm = parse_double_list(value, line);
    else if (key == "drops") c.drops = parse_u64(value, line);
    else if (key == "seed") c.seed = parse_u64(value, line);
    else if (key == "out") c.out_path = std::string(value);
    else if (key == "format") {
        if (value == "csv") c.format = OutputFormat::csv;
        else if (value == "json") c.format = OutputFormat::json;
        else throw ConfigError("format must be csv or json", line);
    } else if (key == "mode") {
        if (value == "rates") c.mode = RunMode::rates;
        else if (value == "min_elements_grid") c.mode = RunMode::min_elements_grid;
        else throw ConfigError("mode must be rates or min_elements_grid", line);
    } else if (key == "alpha2_grid") c.grids.alpha2 = parse_double_list(value, line);
    else if (key == "alpha3_grid") c.grids.alpha3 = parse_double_list(value, line);
    else if (key == "alpha4_grid") c.grids.alpha4 = parse_double_list(value, line);
    else throw ConfigError("unknown key '" + std::string(key) + "'", line);
}

void validate(const RunConfig& c) {
    try {
        c.geometry.validate();
        PowerAllocation::from_geometry(c.geometry).validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (c.drops == 0)
        throw ConfigError("drops must be >= 1");
    if (c.designs.empty())
        throw ConfigError("design list must not be empty");
    if (c.mode == RunMode::rates) {
        if (c.elements.empty())
            throw ConfigError("element list must not be empty");
        for (int n : c.elements)
            if (n < 1)
                throw ConfigError("element counts must be >= 1");
        if (c.power_dbm.empty())
            throw ConfigError("power list must not be empty");
        for (double p : c.power_dbm)
            if (!std::isfinite(p))
                throw ConfigError("powers must be finite");
    } else if (c.grids.alpha3.empty()) {
        throw ConfigError("min_elements_grid mode requires alpha3_grid");
    }
}

std::string fmt(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

template <typename T, typename F>
std::string join(const std::vector<T>& values, F&& f) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += f(values[i]);
    }
    return out;
}

} // namespace

RunConfig parse_config(std::string_view text, const RunConfig& base) {
    RunConfig config = base;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const std::string_view stripped = trim(raw);
        if (stripped.empty())
            continue;

        const auto eq = stripped.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected 'key = value'", line_no);
        const std::string_view key = trim(stripped.substr(0, eq));
        const std::string_view value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("missing key", line_no);
        apply_key(config, key, value, line_no);
    }
    validate(config);
    return config;
}

void apply_preset(RunConfig& config, std::string_view name) {
    const ScenarioGeometry table2 = ScenarioGeometry::table2();
    if (name == "table2") {
        config = RunConfig{};
    } else if (name == "fig2") {
        config = RunConfig{};
        config.mode = RunMode::min_elements_grid;
        config.grids.alpha3.clear();
        for (int i = 20; i <= 40; ++i) // 2.0 .. 4.0 in exact-decimal steps of 0.1
            config.grids.alpha3.push_back(i / 10.0);
        config.grids.alpha4 = {3.0, 3.5, 4.0};
    } else if (name == "fig3") {
        config = RunConfig{};
        config.designs = {DesignKind::ssecb, DesignKind::none};
        config.elements = {27, 54};
        config.power_dbm.clear();
        for (int p = -60; p <= -10; p += 5)
            config.power_dbm.push_back(static_cast<double>(p));
    } else if (name == "fig4") {
        config = RunConfig{};
        config.designs = {DesignKind::ssecb, DesignKind::seb_ccu, DesignKind::seb_ceu,
                          DesignKind::scb, DesignKind::none};
        config.elements = {27, 54, 81, 108};
        config.power_dbm = {-50.0};
    } else {
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    }
    config.geometry = table2;
}

std::string serialize_config(const RunConfig& c) {
    const ScenarioGeometry& g = c.geometry;
    std::ostringstream out;
    out << "# starcomp run configuration\n";
    out << "d_bs_ccu = " << fmt(g.d_bs_ccu) << '\n';
    out << "d_bs_ceu = " << fmt(g.d_bs_ceu) << '\n';
    out << "d_bs_ris = " << fmt(g.d_bs_ris) << '\n';
    out << "d_ris_ccu = " << fmt(g.d_ris_ccu) << '\n';
    out << "d_ris_ceu = " << fmt(g.d_ris_ceu) << '\n';
    out << "d_bs_other_ccu = " << fmt(g.d_bs_other_ccu) << '\n';
    out << "d_bs_other_ceu = " << fmt(g.d_bs_other_ceu) << '\n';
    out << "alpha1 = " << fmt(g.alpha1) << '\n';
    out << "alpha2 = " << fmt(g.alpha2) << '\n';
    out << "alpha3_c = " << fmt(g.alpha3_c) << '\n';
    out << "alpha3_e = " << fmt(g.alpha3_e) << '\n';
    out << "alpha4 = " << fmt(g.alpha4) << '\n';
    out << "k1 = " << fmt(g.rician_k1) << '\n';
    out << "k2 = " << fmt(g.rician_k2) << '\n';
    out << "bandwidth_hz = " << fmt(g.bandwidth_hz) << '\n';
    out << "gamma_c_sq = " << fmt(g.gamma_c_sq) << '\n';
    out << "gamma_e_sq = " << fmt(g.gamma_e_sq) << '\n';
    out << "design = " << join(c.designs, [](DesignKind k) { return std::string(to_string(k)); })
        << '\n';
    out << "elements = " << join(c.elements, [](int n) { return std::to_string(n); }) << '\n';
    out << "power_dbm = " << join(c.power_dbm, fmt) << '\n';
    out << "mode = " << to_string(c.mode) << '\n';
    if (!c.grids.alpha2.empty())
        out << "alpha2_grid = " << join(c.grids.alpha2, fmt) << '\n';
    if (!c.grids.alpha3.empty())
        out << "alpha3_grid = " << join(c.grids.alpha3, fmt) << '\n';
    if (!c.grids.alpha4.empty())
        out << "alpha4_grid = " << join(c.grids.alpha4, fmt) << '\n';
    out << "drops = " << c.drops << '\n';
    out << "seed = " << c.seed << '\n';
    out << "out = " << c.out_path << '\n';
    out << "format = " << to_string(c.format) << '\n';
    return out.str();
}

const char* to_string(OutputFormat format) {
    return format == OutputFormat::csv ? "csv" : "json";
}

const char* to_string(RunMode mode) {
    return mode == RunMode::rates ? "rates" : "min_elements_grid";
}

} // namespace starcomp
