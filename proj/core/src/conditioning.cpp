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

#include "cvpurify/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cvpurify/errors.hpp"

namespace cvpurify {

namespace {

constexpr double kDenominatorFloor = 1e-12;

void check_denominator(const GaussianChi4 &s) {
    if (!(s.b + 1.0 - std::abs(s.b12) >= kDenominatorFloor)) {
        throw DegenerateError("atomic vacuum projection diverges: B + 1 - |B12| = " +
                              std::to_string(s.b + 1.0 - std::abs(s.b12)));
    }
}

}  // namespace

double GaussianTerm2::evaluate(Complex alpha1, Complex alpha2) const {
    const double e = -decay1 * std::norm(alpha1) - decay2 * std::norm(alpha2) + 2.0 * pair * (alpha1 * alpha2).real();
    return weight * std::exp(e);
}

double WeightedGaussianMix::evaluate(Complex alpha1, Complex alpha2) const {
    double total = 0.0;
    for (const auto &t : terms) {
        total += t.evaluate(alpha1, alpha2);
    }
    return total;
}

double OutcomeProbabilities::operator[](Outcome x) const {
    switch (x.index()) {
        case 0:
            return p00;
        case 1:
            return p01;
        case 2:
            return p10;
        default:
            return p11;
    }
}

std::optional<double> FidelityReport::operator[](Outcome x) const {
    switch (x.index()) {
        case 0:
            return f00;
        case 1:
            return f01;
        case 2:
            return f10;
        default:
            return f11;
    }
}

VacuumIntegrals partial_vacuum_integrals(const GaussianChi4 &s) {
    check_denominator(s);
    const double bp = s.b + 1.0;
    const double den = bp * bp - s.b12 * s.b12;
    const double cc = s.c * s.c;
    const double dd = s.d * s.d;
    const double cd = s.c * s.d;

    // Projecting atomic mode 2 on vacuum integrates out beta_2, which couples
    // to alpha_1 through C and to alpha_2 through D for both kinds of
    // interaction; projecting mode 1 mirrors this.
    VacuumIntegrals out;
    out.terms[0] = {1.0, s.a, s.a, s.a12};
    out.terms[1] = {1.0 / bp, s.a - cc / bp, s.a - dd / bp, s.a12 + cd / bp};
    out.terms[2] = {1.0 / bp, s.a - dd / bp, s.a - cc / bp, s.a12 + cd / bp};
    const double both_decay = s.a - (bp * (cc + dd) + 2.0 * s.b12 * cd) / den;
    const double both_pair = s.a12 + (2.0 * bp * cd + s.b12 * (cc + dd)) / den;
    out.terms[3] = {1.0 / den, both_decay, both_decay, both_pair};
    return out;
}

OutcomeProbabilities outcome_probabilities(const GaussianChi4 &s) {
    check_denominator(s);
    // Rearranged so that nothing cancels as B, B12 -> 0 (near t = 0 or full
    // beam-splitter periods): p01 = 1/(B+1) - p00 and p11 = 1 - 2/(B+1) + p00.
    const double b = s.b;
    const double bp = b + 1.0;
    const double b12sq = s.b12 * s.b12;
    const double den = bp * bp - b12sq;
    OutcomeProbabilities p;
    p.p00 = 1.0 / den;
    p.p01 = std::max(0.0, (b * bp - b12sq) / (bp * den));
    p.p10 = p.p01;
    p.p11 = std::max(0.0, (b * b * bp + (1.0 - b) * b12sq) / (bp * den));
    return p;
}

WeightedGaussianMix conditional_chi(const GaussianChi4 &state, Outcome outcome, double threshold) {
    const double probability = outcome_probabilities(state)[outcome];
    if (!(probability >= threshold)) {
        throw DegenerateError("outcome " + outcome.label() + " has probability " + std::to_string(probability) +
                              " below the degeneracy threshold");
    }
    const auto integrals = partial_vacuum_integrals(state);

    // Outcome 0 on mode l keeps the vacuum projection (index 1); outcome 1
    // is the identity (index 0) minus it.
    std::vector<std::pair<double, GaussianTerm2>> signed_terms;
    for (int u = 0; u < 2; ++u) {
        if (outcome.x1 == 0 && u == 0) {
            continue;
        }
        for (int v = 0; v < 2; ++v) {
            if (outcome.x2 == 0 && v == 0) {
                continue;
            }
            const int sign_u = (outcome.x1 == 1 && u == 1) ? -1 : 1;
            const int sign_v = (outcome.x2 == 1 && v == 1) ? -1 : 1;
            signed_terms.emplace_back(static_cast<double>(sign_u * sign_v), integrals.at(u, v));
        }
    }

    double raw_total = 0.0;
    for (const auto &[sign, term] : signed_terms) {
        raw_total += sign * term.weight;
    }

    WeightedGaussianMix mix;
    mix.outcome = outcome;
    mix.probability = probability;
    mix.terms.reserve(signed_terms.size());
    for (const auto &[sign, term] : signed_terms) {
        GaussianTerm2 t = term;
        t.weight = sign * term.weight / raw_total;
        mix.terms.push_back(t);
    }
    return mix;
}

double teleportation_fidelity(const WeightedGaussianMix &mix) {
    double f = 0.0;
    for (const auto &t : mix.terms) {
        const double rate = 2.0 + (t.decay1 + t.decay2) - 2.0 * t.pair;
        if (!(rate > 0.0)) {
            throw DivergenceError("fidelity integral diverges for a term with 2 + g1 + g2 - 2 gc = " +
                                  std::to_string(rate));
        }
        f += t.weight / rate;
    }
    return f;
}

double initial_fidelity(const ProtocolParams &params) {
    ProtocolParams p = params;
    p.tau = 0.0;
    p.validate();
    const double one_minus_l2 = 1.0 - p.lambda * p.lambda;
    return 0.5 * one_minus_l2 / (1.0 - p.lambda + p.n_th * one_minus_l2);
}

double efficiency(double p11, double f11, double f_init) {
    return f11 > f_init ? p11 * (f11 - f_init) : 0.0;
}

GaussianChi4 swap_exchange(const GaussianChi4 &state) {
    GaussianChi4 out = state;
    std::swap(out.a, out.b);
    std::swap(out.a12, out.b12);
    return out;
}

double f_param_baseline(double tau) {
    return 0.5 * (1.0 + tau);
}

FidelityReport fidelity_report(const GaussianChi4 &state, const ProtocolParams &params, double threshold) {
    FidelityReport r;
    r.probabilities = outcome_probabilities(state);
    r.f_init = initial_fidelity(params);
    std::array<std::optional<double>, 4> f;
    for (const auto x : kAllOutcomes) {
        if (r.probabilities[x] >= threshold) {
            f[x.index()] = teleportation_fidelity(conditional_chi(state, x, threshold));
        }
    }
    r.f00 = f[0];
    r.f01 = f[1];
    r.f10 = f[2];
    r.f11 = f[3];
    r.efficiency = r.f11 ? efficiency(r.probabilities.p11, *r.f11, r.f_init) : 0.0;
    return r;
}

}  // namespace cvpurify
