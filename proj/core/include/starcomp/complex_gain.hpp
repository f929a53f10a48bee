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

#ifndef STARCOMP_COMPLEX_GAIN_HPP
#define STARCOMP_COMPLEX_GAIN_HPP

#include <cmath>
#include <complex>

namespace starcomp {

/// Dimensionless complex amplitude gain of a single propagation path.
using ComplexGain = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

/// Wraps an angle into [0, 2*pi).
inline double wrap_2pi(double angle) {
    double r = std::fmod(angle, two_pi);
    if (r < 0.0)
        r += two_pi;
    if (r >= two_pi) // fmod/addition rounding can land exactly on 2*pi
        r = 0.0;
    return r;
}

/// Phase of a complex gain in [0, 2*pi). phase_2pi(0) is 0.
inline double phase_2pi(ComplexGain g) { return wrap_2pi(std::arg(g)); }

/// Phase shift that rotates a path with phase `path_phase` onto `target_phase`,
/// i.e. (target_phase - path_phase) mod 2*pi, in [0, 2*pi).
inline double cophase_angle(double target_phase, double path_phase) {
    return wrap_2pi(target_phase - path_phase);
}

/// e^{j*theta}.
inline ComplexGain unit_phasor(double theta) { return std::polar(1.0, theta); }

} // namespace starcomp

#endif
