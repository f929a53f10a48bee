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

#ifndef STARCOMP_ERRORS_HPP
#define STARCOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starcomp {

/// A cancellation system whose Gram matrix is numerically singular: the
/// effective channels of the two target users are (close to) linearly
/// dependent and no bounded least-norm solution exists.
class SingularSystem : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation
/// (non-positive distance, amplitude outside [0,1], ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A rejected run configuration. Carries the 1-based config line number when
/// the problem can be pinned to one ("0" means not line-addressable).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_ = 0;
};

/// Failure to read or write a result or config file.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace starcomp

#endif
