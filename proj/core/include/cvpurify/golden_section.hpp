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

#ifndef CVPURIFY_GOLDEN_SECTION_HPP
#define CVPURIFY_GOLDEN_SECTION_HPP

#include <cmath>
#include <limits>
#include <optional>

namespace cvpurify {

struct GoldenSectionResult {
    double x;
    double value;
};

/// Maximizes f over [lo, hi] by golden-section search. `f` returns an empty
/// optional at inadmissible points; `seed` must be admissible. The search keeps
/// the best admissible point seen and, when both probes are inadmissible,
/// shrinks toward it, so a maximum sitting on the edge of the admissible set
/// is located to within `tol`.
template <class F>
GoldenSectionResult golden_section_maximize(F &&f, double lo, double hi, double seed, double seed_value,
                                            double tol = 1e-12, int max_iterations = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    GoldenSectionResult best{seed, seed_value};
    constexpr double kInadmissible = -std::numeric_limits<double>::infinity();

    auto probe = [&](double x) {
        const std::optional<double> v = f(x);
        if (!v) {
            return kInadmissible;
        }
        if (*v > best.value) {
            best = {x, *v};
        }
        return *v;
    };

    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = probe(c);
    double fd = probe(d);
    for (int it = 0; it < max_iterations && (b - a) > tol; ++it) {
        const bool both_out = fc == kInadmissible && fd == kInadmissible;
        bool keep_left;
        if (both_out) {
            if (best.x < c) {
                keep_left = true;
            } else if (best.x > d) {
                keep_left = false;
            } else {
                a = c;
                b = d;
                c = b - inv_phi * (b - a);
                d = a + inv_phi * (b - a);
                fc = probe(c);
                fd = probe(d);
                continue;
            }
        } else {
            keep_left = fc >= fd;
        }
        if (keep_left) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = probe(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = probe(d);
        }
    }
    return best;
}

}  // namespace cvpurify

#endif  // CVPURIFY_GOLDEN_SECTION_HPP
