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

#ifndef STARCOMP_STARCOMP_HPP
#define STARCOMP_STARCOMP_HPP

// Umbrella header.

#include "starcomp/beamforming.hpp"
#include "starcomp/channel.hpp"
#include "starcomp/complex_gain.hpp"
#include "starcomp/config.hpp"
#include "starcomp/errors.hpp"
#include "starcomp/experiment.hpp"
#include "starcomp/geometry.hpp"
#include "starcomp/least_norm.hpp"
#include "starcomp/link.hpp"
#include "starcomp/random_stream.hpp"
#include "starcomp/results.hpp"
#include "starcomp/runner.hpp"
#include "starcomp/units.hpp"

#endif
