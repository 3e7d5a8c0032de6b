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

#ifndef CVPURIFY_GAUSS_HERMITE_HPP
#define CVPURIFY_GAUSS_HERMITE_HPP

#include <vector>

namespace cvpurify {

/// Nodes and weights for int_{-inf}^{inf} exp(-x^2) f(x) dx ~= sum_i w_i f(x_i).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch eigen-decomposition of the Jacobi matrix, each node then
/// polished by Newton iteration on the orthonormal Hermite recurrence.
/// Exact for polynomials of degree < 2 * order.
GaussHermiteRule gauss_hermite(int order);

}  // namespace cvpurify

#endif  // CVPURIFY_GAUSS_HERMITE_HPP
