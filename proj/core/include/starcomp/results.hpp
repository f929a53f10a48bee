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

#ifndef STARCOMP_RESULTS_HPP
#define STARCOMP_RESULTS_HPP

#include <string>

#include "starcomp/config.hpp"
#include "starcomp/experiment.hpp"

namespace starcomp {

/// CSV document for a sweep result: header row, one row per (point, user)
/// for rate sweeps or one row per grid point for min-elements sweeps,
/// '.' decimal separator, LF line endings, round-trip float precision.
/// std_error of a single-drop point serializes as "nan".
std::string to_csv(const SweepResult& result);

/// JSON array of row objects carrying the same field names as the CSV
/// columns. Unrepresentable numbers (NaN) serialize as null.
std::string to_json(const SweepResult& result);

/// Writes the formatted result to `path` ("-" = stdout). Throws IoError when
/// the destination cannot be written.
void emit_results(const SweepResult& result, OutputFormat format, const std::string& path);

} // namespace starcomp

#endif
