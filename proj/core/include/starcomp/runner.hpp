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

#ifndef STARCOMP_RUNNER_HPP
#define STARCOMP_RUNNER_HPP

#include "starcomp/config.hpp"

namespace starcomp {

/// Executes a resolved run end to end: sweeps every requested design and
/// writes the combined result. Returns a process exit code: 0 on success,
/// 1 for configuration problems, 2 for I/O or unexpected runtime failures.
/// Diagnostics go to stderr.
int run(const RunConfig& config);

} // namespace starcomp

#endif
