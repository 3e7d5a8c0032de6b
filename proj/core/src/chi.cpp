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

#include "cvpurify/chi.hpp"

#include <cmath>
#include <string>

#include "cvpurify/errors.hpp"
#include "cvpurify/rk4.hpp"

namespace cvpurify {

std::string_view to_string(InteractionKind kind) {
    return kind == InteractionKind::Parametric ? "parametric" : "beam-splitter";
}

InteractionKind parse_interaction_kind(std::string_view text) {
    if (text == "parametric") {
        return InteractionKind::Parametric;
    }
    if (text == "beam-splitter") {
        return InteractionKind::BeamSplitter;
    }
    throw DomainError("unknown interaction kind '" + std::string(text) +
                      "' (expected 'parametric' or 'beam-splitter')");
}

void ProtocolParams::validate() const {
    if (!(lambda >= 0.0 && lambda < 1.0)) {
        throw DomainError("lambda must lie in [0, 1), got " + std::to_string(lambda));
    }
    if (!(n_th >= 0.0) || !std::isfinite(n_th)) {
        throw DomainError("n_th must be finite and >= 0, got " + std::to_string(n_th));
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw DomainError("tau must be finite and >= 0, got " + std::to_string(tau));
    }
}

GaussianChi4 initial_chi(const ProtocolParams &params, InteractionKind kind) {
    ProtocolParams p = params;
    p.tau = 0.0;
    p.validate();
    const double l2 = p.lambda * p.lambda;
    GaussianChi4 out;
    out.kind = kind;
    out.a = l2 / (1.0 - l2) + p.n_th;
    out.a12 = p.lambda / (1.0 - l2);
    return out;
}

GaussianChi4 evolve_closed_form(const ProtocolParams &params, InteractionKind kind, const EvolutionOptions &options) {
    params.validate();
    const double lam = params.lambda;
    const double t = params.tau;
    const double one_minus_l2 = 1.0 - lam * lam;
    GaussianChi4 out;
    out.kind = kind;
    if (kind == InteractionKind::Parametric) {
        if (t > options.parametric_tau_cap) {
            throw DomainError("parametric tau " + std::to_string(t) + " exceeds the cap " +
                              std::to_string(options.parametric_tau_cap));
        }
        // (A + 1) at t = 0, i.e. <a a^dag> of the input.
        const double anti_normal = (1.0 + params.n_th * one_minus_l2) / one_minus_l2;
        const double ch = std::cosh(t);
        const double sh = std::sinh(t);
        const double sh2t = std::sinh(2.0 * t);
        out.a = anti_normal * ch * ch - 1.0;
        out.b = anti_normal * sh * sh;
        out.d = 0.5 * anti_normal * sh2t;
        out.c = -0.5 * lam * sh2t / one_minus_l2;
        out.a12 = lam * ch * ch / one_minus_l2;
        out.b12 = lam * sh * sh / one_minus_l2;
    } else {
        const double occupation = (lam * lam + params.n_th * one_minus_l2) / one_minus_l2;
        const double co = std::cos(t);
        const double si = std::sin(t);
        const double s2t = std::sin(2.0 * t);
        out.a = occupation * co * co;
        out.b = occupation * si * si;
        out.d = 0.5 * occupation * s2t;
        out.c = -0.5 * lam * s2t / one_minus_l2;
        out.a12 = lam * co * co / one_minus_l2;
        out.b12 = lam * si * si / one_minus_l2;
    }
    return out;
}

std::array<double, 6> coefficient_rates(InteractionKind kind, const std::array<double, 6> &v) {
    const double a = v[0], b = v[1], c = v[2], d = v[3], a12 = v[4], b12 = v[5];
    if (kind == InteractionKind::Parametric) {
        return {2.0 * d, 2.0 * d, -(a12 + b12), 1.0 + a + b, -2.0 * c, -2.0 * c};
    }
    return {-2.0 * d, 2.0 * d, -(a12 - b12), a - b, 2.0 * c, -2.0 * c};
}

GaussianChi4 evolve_ode(const GaussianChi4 &init, double tau, double step) {
    const auto kind = init.kind;
    auto out = integrate_rk4(init.coefficients(), tau, step,
                             [kind](const std::array<double, 6> &v) { return coefficient_rates(kind, v); });
    return GaussianChi4::from_coefficients(kind, out);
}

double chi_exponent(const GaussianChi4 &s, Complex a1, Complex a2, Complex b1, Complex b2) {
    // x + c.c. == 2 Re x
    auto twice_re = [](Complex z) { return 2.0 * z.real(); };
    double e = -s.a * (std::norm(a1) + std::norm(a2)) - s.b * (std::norm(b1) + std::norm(b2)) +
               s.a12 * twice_re(a1 * a2) + s.b12 * twice_re(b1 * b2);
    if (s.kind == InteractionKind::Parametric) {
        e += s.c * twice_re(a1 * std::conj(b2) + a2 * std::conj(b1));
        e += s.d * twice_re(a1 * b1 + a2 * b2);
    } else {
        e += s.d * twice_re(a1 * std::conj(b1) + a2 * std::conj(b2));
        e += s.c * twice_re(a1 * b2 + a2 * b1);
    }
    return e;
}

}  // namespace cvpurify
