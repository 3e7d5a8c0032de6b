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

#ifndef CVPURIFY_SWEEP_ORACLE_CHECK_HPP
#define CVPURIFY_SWEEP_ORACLE_CHECK_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvpurify/chi.hpp"

namespace cvpurify::sweep {

enum class OracleGrid { Small, Full };

/// Accepts "small" and "full". Throws ConfigError otherwise.
OracleGrid parse_oracle_grid(std::string_view text);

struct OracleCheckOptions {
    OracleGrid grid = OracleGrid::Small;
    /// Replaces every per-check tolerance when set.
    std::optional<double> tolerance_override;
    /// Applied to each closed-form state before it is compared (fault injection).
    std::function<void(GaussianChi4 &)> corrupt;
};

struct OracleCheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    int samples = 0;
    bool passed = false;
    /// Set when an oracle threw instead of producing a number.
    std::string error;
};

struct OracleReport {
    OracleGrid grid = OracleGrid::Small;
    std::vector<OracleCheckResult> checks;

    bool passed() const;
    std::string to_json() const;
};

/// Default per-check tolerances.
inline constexpr double kOdeTolerance = 1e-8;
inline constexpr double kIntegralTolerance = 1e-6;
inline constexpr double kQuadratureFidelityTolerance = 1e-8;
inline constexpr double kFockBeamSplitterTolerance = 1e-4;
inline constexpr double kFockParametricTolerance = 1e-3;

/// Runs, in order:
///
///   closed_form_vs_ode              coefficients, both kinds, tau in [0, 3]
///   vacuum_integrals_vs_quadrature  I(.; u, v) on random states and arguments
///   fidelity_vs_quadrature          every defined conditional fidelity
///   fock_beam_splitter              probabilities, fidelities and chi at n_th 0
///   fock_parametric                 same at tau 0.3
///
/// The small grid truncates Fock space at 20 quanta and uses fewer samples;
/// the full grid uses 40 quanta with lambda in {0.3, 0.5} and beam-splitter
/// tau in {0.5, 1.0, 2.9}. Oracle exceptions become failed checks.
OracleReport oracle_check(const OracleCheckOptions &options = {});

}  // namespace cvpurify::sweep

#endif  // CVPURIFY_SWEEP_ORACLE_CHECK_HPP
