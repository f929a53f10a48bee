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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "starcomp/config.hpp"
#include "starcomp/errors.hpp"
#include "starcomp/runner.hpp"

namespace {

std::string load_config_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw starcomp::IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "starcomp - Monte-Carlo link-level simulator for a STAR-RIS assisted\n"
        "two-cell NOMA downlink with joint enhancement/cancellation passive\n"
        "beamforming and its benchmark designs"};

    std::string config_path, preset, design, elements, power_dbm, out_path, format;
    std::string drops, seed;
    app.add_option("--config", config_path, "Config file (key = value lines)");
    app.add_option("--preset", preset, "Scenario preset: table2, fig2, fig3 or fig4");
    app.add_option("--design", design, "Design: ssecb, seb-ccu, seb-ceu, scb or none");
    app.add_option("--elements", elements, "Surface element counts, e.g. 27,54");
    app.add_option("--power-dbm", power_dbm, "Transmit powers, list or start:stop:step");
    app.add_option("--drops", drops, "Monte-Carlo drops per point");
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--out", out_path, "Output path ('-' = stdout)");
    app.add_option("--format", format, "Output format: csv or json");

    CLI11_PARSE(app, argc, argv);

    try {
        // Layering: preset, then the config file, then explicit flags. Flag
        // values reuse the config grammar (comma lists, start:stop:step
        // ranges) by being parsed as a one-line-per-flag document.
        starcomp::RunConfig config;
        if (!preset.empty())
            starcomp::apply_preset(config, preset);
        if (!config_path.empty())
            config = starcomp::parse_config(load_config_text(config_path), config);

        std::string overrides;
        auto override_line = [&overrides](const std::string& key, const std::string& value) {
            if (!value.empty())
                overrides += key + " = " + value + "\n";
        };
        override_line("design", design);
        override_line("elements", elements);
        override_line("power_dbm", power_dbm);
        override_line("drops", drops);
        override_line("seed", seed);
        override_line("out", out_path);
        override_line("format", format);
        config = starcomp::parse_config(overrides, config);

        return starcomp::run(config);
    } catch (const starcomp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const starcomp::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
