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

#include "starcomp/results.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "starcomp/errors.hpp"

namespace starcomp {

namespace {

std::string fmt(double v) {
    if (std::isnan(v))
        return "nan";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

// A multi-valued alpha2 axis gets its own column; the common fixed-alpha2
// grid keeps the compact (alpha3, alpha4, min_elements) schema.
bool alpha2_swept(const SweepResult& result) {
    for (const auto& row : result.grid)
        if (row.alpha2 != result.grid.front().alpha2)
            return true;
    return false;
}

} // namespace

std::string to_csv(const SweepResult& result) {
    std::string out;
    if (result.is_grid()) {
        const bool with_a2 = alpha2_swept(result);
        out = with_a2 ? "alpha2,alpha3,alpha4,min_elements\n" : "alpha3,alpha4,min_elements\n";
        for (const auto& row : result.grid) {
            if (with_a2)
                out += fmt(row.alpha2) + ',';
            out += fmt(row.alpha3) + ',' + fmt(row.alpha4) + ',' +
                   std::to_string(row.min_elements) + '\n';
        }
        return out;
    }

    out = "design,L,p_dbm,user,rate_mean,rate_stderr,feasible_fraction,drops,seed\n";
    for (const auto& point : result.points) {
        for (const User u : both_users) {
            const auto& stats = point.rate[index(u)];
            out += std::string(to_string(point.design)) + ',' + std::to_string(point.elements) +
                   ',' + fmt(point.p_dbm) + ',' + to_string(u) + ',' + fmt(stats.mean) + ',' +
                   fmt(stats.std_error) + ',' + fmt(point.feasible_fraction) + ',' +
                   std::to_string(point.drops) + ',' + std::to_string(point.seed) + '\n';
        }
    }
    return out;
}

std::string to_json(const SweepResult& result) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (result.is_grid()) {
        const bool with_a2 = alpha2_swept(result);
        for (const auto& row : result.grid) {
            nlohmann::ordered_json obj;
            if (with_a2)
                obj["alpha2"] = row.alpha2;
            obj["alpha3"] = row.alpha3;
            obj["alpha4"] = row.alpha4;
            obj["min_elements"] = row.min_elements;
            rows.push_back(std::move(obj));
        }
    } else {
        for (const auto& point : result.points) {
            for (const User u : both_users) {
                const auto& stats = point.rate[index(u)];
                nlohmann::ordered_json obj;
                obj["design"] = to_string(point.design);
                obj["L"] = point.elements;
                obj["p_dbm"] = point.p_dbm;
                obj["user"] = to_string(u);
                obj["rate_mean"] = stats.mean;
                obj["rate_stderr"] = stats.std_error; // NaN dumps as null
                obj["feasible_fraction"] = point.feasible_fraction;
                obj["drops"] = point.drops;
                obj["seed"] = point.seed;
                rows.push_back(std::move(obj));
            }
        }
    }
    return rows.dump(2) + "\n";
}

void emit_results(const SweepResult& result, OutputFormat format, const std::string& path) {
    const std::string body = format == OutputFormat::csv ? to_csv(result) : to_json(result);
    if (path == "-") {
        std::cout << body;
        std::cout.flush();
        if (!std::cout)
            throw IoError("emit_results: failed writing to stdout");
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("emit_results: cannot open '" + path + "' for writing");
    file << body;
    file.flush();
    if (!file)
        throw IoError("emit_results: failed writing '" + path + "'");
}

} // namespace starcomp
