// Copyright 2026 The cvpurify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVPURIFY_ERRORS_HPP
#define CVPURIFY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace cvpurify {

/// Parameter outside the physical domain (lambda >= 1, negative n_th, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A denominator or outcome probability fell below the degeneracy threshold.
/// Raised for branches that never occur physically, e.g. outcome (0,1) at t = 0.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Gaussian integral of the form int exp(-c |xi|^2) was requested with c <= 0.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Doubling a quadrature order moved the result by more than the allowed amount.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The truncated Fock basis is too small for the requested evolution.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed row broke a physical invariant (probability sum, fidelity range, ...).
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every candidate time in a search window fell below the probability floor.
struct NoAdmissiblePointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed run configuration. `where` names the offending field or position.
struct ConfigError : std::invalid_argument {
    ConfigError(std::string where, const std::string &what)
        : std::invalid_argument(where.empty() ? what : where + ": " + what), where(std::move(where)) {
    }
    std::string where;
};

/// Failure reading or writing a file.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cvpurify

#endif  // CVPURIFY_ERRORS_HPP
