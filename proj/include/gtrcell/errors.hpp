// SPDX-License-Identifier: Apache-2.0
//
// gtrcell - average spectral efficiency of PPP cellular networks under
// generalized two-ray fading
// Copyright (C) 2026 the gtrcell developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace gtrcell {

/// A numerical routine failed to converge. Carries the best available
/// partial value and its error estimate so callers can degrade gracefully.
class numeric_error : public std::runtime_error {
  public:
    numeric_error(const std::string &what, double partial, double err_est)
        : std::runtime_error(what), partial_(partial), err_est_(err_est) {}

    double partial() const noexcept { return partial_; }
    double err_est() const noexcept { return err_est_; }

  private:
    double partial_;
    double err_est_;
};

/// Invalid or inconsistent user-facing configuration (CLI exit code 2).
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace gtrcell
