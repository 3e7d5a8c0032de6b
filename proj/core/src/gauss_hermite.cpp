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

#include "cvpurify/gauss_hermite.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "cvpurify/errors.hpp"

namespace cvpurify {

namespace {

// Orthonormal Hermite polynomial h_n(x) (weight exp(-x^2)) and its derivative.
struct HermiteValue {
    double value;
    double derivative;
};

HermiteValue orthonormal_hermite(int n, double x) {
    double p_prev = 0.0;
    double p = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
    for (int j = 1; j <= n; ++j) {
        const double p_next = x * std::sqrt(2.0 / j) * p - std::sqrt((j - 1.0) / j) * p_prev;
        p_prev = p;
        p = p_next;
    }
    return {p, std::sqrt(2.0 * n) * p_prev};
}

}  // namespace

GaussHermiteRule gauss_hermite(int order) {
    if (order < 1) {
        throw DomainError("Gauss-Hermite order must be positive, got " + std::to_string(order));
    }
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);

    GaussHermiteRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        double x = solver.eigenvalues()(i);
        for (int it = 0; it < 4; ++it) {
            const auto h = orthonormal_hermite(order, x);
            if (h.derivative == 0.0) {
                break;
            }
            x -= h.value / h.derivative;
        }
        const double dh = orthonormal_hermite(order, x).derivative;
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / (dh * dh);
    }
    return rule;
}

}  // namespace cvpurify
