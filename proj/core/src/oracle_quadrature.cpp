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

#include "cvpurify/oracle/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvpurify/errors.hpp"
#include "cvpurify/gauss_hermite.hpp"
#include "rule_cache.hpp"

namespace cvpurify::oracle {

void QuadratureSpec::validate() const {
    if (order < kMinOrder || order > kMaxOrder) {
        throw DomainError("quadrature order must lie in [" + std::to_string(kMinOrder) + ", " +
                          std::to_string(kMaxOrder) + "], got " + std::to_string(order));
    }
    if (!(convergence_tolerance > 0.0)) {
        throw DomainError("quadrature convergence tolerance must be positive");
    }
}

namespace {

// Integrand of I(.; u, v) with the atomic Gaussian weight divided out:
// the beta arguments are scaled by 1/sqrt(scale) so that the Hermite weight
// exp(-x^2 - y^2) matches the diagonal decay exp(-(B + 1)|beta|^2).
double integrate_I(const GaussianChi4 &s, Complex alpha1, Complex alpha2, int u, int v, int order) {
    const auto &rule = cached_gauss_hermite(order);
    const double scale = s.b + 1.0;
    const double inv_sqrt_scale = 1.0 / std::sqrt(scale);
    const int n = order;

    auto integrand = [&](Complex beta1, Complex beta2, double hermite_exponent) {
        const double e = chi_exponent(s, alpha1, alpha2, beta1, beta2) - std::norm(beta1) - std::norm(beta2);
        return std::exp(e + hermite_exponent);
    };

    if (u == 1 && v == 1) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double w1 = rule.weights[i] * rule.weights[j];
                const double r1 = rule.nodes[i] * rule.nodes[i] + rule.nodes[j] * rule.nodes[j];
                const Complex beta1 = Complex(rule.nodes[i], rule.nodes[j]) * inv_sqrt_scale;
                double inner = 0.0;
                for (int k = 0; k < n; ++k) {
                    for (int l = 0; l < n; ++l) {
                        const double r2 = rule.nodes[k] * rule.nodes[k] + rule.nodes[l] * rule.nodes[l];
                        const Complex beta2 = Complex(rule.nodes[k], rule.nodes[l]) * inv_sqrt_scale;
                        inner += rule.weights[k] * rule.weights[l] * integrand(beta1, beta2, r1 + r2);
                    }
                }
                total += w1 * inner;
            }
        }
        const double jacobian = 1.0 / (std::numbers::pi * scale);
        return total * jacobian * jacobian;
    }

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double r = rule.nodes[i] * rule.nodes[i] + rule.nodes[j] * rule.nodes[j];
            const Complex beta = Complex(rule.nodes[i], rule.nodes[j]) * inv_sqrt_scale;
            const double value = u == 1 ? integrand(beta, 0.0, r) : integrand(0.0, beta, r);
            total += rule.weights[i] * rule.weights[j] * value;
        }
    }
    return total / (std::numbers::pi * scale);
}

template <class Rule>
double converged(const QuadratureSpec &quad, const char *what, Rule &&at_order) {
    quad.validate();
    const double coarse = at_order(quad.order);
    const double fine = at_order(2 * quad.order);
    if (!(std::abs(fine - coarse) <= quad.convergence_tolerance)) {
        throw ConvergenceError(std::string(what) + ": doubling the quadrature order from " +
                               std::to_string(quad.order) + " changed the result by " +
                               std::to_string(std::abs(fine - coarse)));
    }
    return fine;
}

}  // namespace

double quadrature_I(const GaussianChi4 &state, Complex alpha1, Complex alpha2, int u, int v,
                    const QuadratureSpec &quad) {
    if ((u != 0 && u != 1) || (v != 0 && v != 1)) {
        throw DomainError("quadrature_I: u and v must be 0 or 1");
    }
    if (u == 0 && v == 0) {
        return std::exp(chi_exponent(state, alpha1, alpha2, 0.0, 0.0));
    }
    if (!(state.b + 1.0 > std::abs(state.b12))) {
        throw DegenerateError("quadrature_I: atomic Gaussian is not integrable (B + 1 <= |B12|)");
    }
    return converged(quad, "quadrature_I",
                     [&](int order) { return integrate_I(state, alpha1, alpha2, u, v, order); });
}

double quadrature_fidelity(const WeightedGaussianMix &mix, const QuadratureSpec &quad) {
    return converged(quad, "quadrature_fidelity", [&](int order) {
        const auto &rule = cached_gauss_hermite(order);
        // xi = (x + i y) / sqrt(2) turns exp(-2|xi|^2) into the Hermite weight.
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        double total = 0.0;
        for (int i = 0; i < order; ++i) {
            for (int j = 0; j < order; ++j) {
                const Complex xi = Complex(rule.nodes[i], rule.nodes[j]) * inv_sqrt2;
                total += rule.weights[i] * rule.weights[j] * mix.evaluate(std::conj(xi), xi);
            }
        }
        return total / (2.0 * std::numbers::pi);
    });
}

}  // namespace cvpurify::oracle
