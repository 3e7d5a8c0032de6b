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

#ifndef CVPURIFY_ORACLE_QUADRATURE_HPP
#define CVPURIFY_ORACLE_QUADRATURE_HPP

#include "cvpurify/chi.hpp"
#include "cvpurify/conditioning.hpp"

namespace cvpurify::oracle {

/// Gauss-Hermite nodes per real dimension. Every oracle integral is evaluated
/// at `order` and at `2 * order`; if the two differ by more than
/// `convergence_tolerance` a ConvergenceError is raised.
struct QuadratureSpec {
    int order = 32;
    double convergence_tolerance = 1e-6;

    static constexpr int kMinOrder = 8;
    static constexpr int kMaxOrder = 128;

    /// Throws DomainError outside [kMinOrder, kMaxOrder].
    void validate() const;
};

/// I(alpha1, alpha2; u, v) by brute-force integration of chi(alpha, beta)
/// e^{-|beta1|^2 - |beta2|^2} over the projected atomic arguments
/// (u, v = 1: d^2 beta / pi; u, v = 0: beta = 0).
double quadrature_I(const GaussianChi4 &state, Complex alpha1, Complex alpha2, int u, int v,
                    const QuadratureSpec &quad = {});

/// int d^2 xi / pi e^{-2|xi|^2} mix(xi*, xi) by 2-D Gauss-Hermite.
double quadrature_fidelity(const WeightedGaussianMix &mix, const QuadratureSpec &quad = {});

}  // namespace cvpurify::oracle

#endif  // CVPURIFY_ORACLE_QUADRATURE_HPP
