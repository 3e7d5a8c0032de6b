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

#ifndef CVPURIFY_RK4_HPP
#define CVPURIFY_RK4_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "cvpurify/errors.hpp"

namespace cvpurify {

/// Number of equal steps used to cover [0, span] with steps no longer than `step`.
/// The last step is never shortened: the step is shrunk uniformly instead, so the
/// integration lands on `span` exactly.
inline std::size_t rk4_step_count(double span, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw DomainError("rk4: step must be positive and finite");
    }
    if (!(span >= 0.0) || !std::isfinite(span)) {
        throw DomainError("rk4: integration span must be non-negative and finite");
    }
    if (span == 0.0) {
        return 0;
    }
    return static_cast<std::size_t>(std::ceil(span / step - 1e-9));
}

/// Classical fixed-step fourth-order Runge-Kutta for autonomous systems
/// y' = rhs(y) with y a fixed-size real vector.
template <std::size_t N, class Rhs>
std::array<double, N> integrate_rk4(std::array<double, N> y, double span, double step, Rhs &&rhs) {
    const std::size_t n = rk4_step_count(span, step);
    if (n == 0) {
        return y;
    }
    const double h = span / static_cast<double>(n);
    auto shifted = [](const std::array<double, N> &base, const std::array<double, N> &k, double scale) {
        std::array<double, N> out;
        for (std::size_t i = 0; i < N; ++i) {
            out[i] = base[i] + scale * k[i];
        }
        return out;
    };
    for (std::size_t s = 0; s < n; ++s) {
        const auto k1 = rhs(y);
        const auto k2 = rhs(shifted(y, k1, 0.5 * h));
        const auto k3 = rhs(shifted(y, k2, 0.5 * h));
        const auto k4 = rhs(shifted(y, k3, h));
        for (std::size_t i = 0; i < N; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    return y;
}

}  // namespace cvpurify

#endif  // CVPURIFY_RK4_HPP
