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

#ifndef CVPURIFY_CONDITIONING_HPP
#define CVPURIFY_CONDITIONING_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cvpurify/chi.hpp"

namespace cvpurify {

/// Vacuum / not-vacuum result on the two measured modes (0 = no excitation).
struct Outcome {
    int x1 = 0;
    int x2 = 0;

    constexpr int index() const {
        return 2 * x1 + x2;
    }
    std::string label() const {
        return std::to_string(x1) + std::to_string(x2);
    }
    bool operator==(const Outcome &) const = default;
};

inline constexpr std::array<Outcome, 4> kAllOutcomes{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

/// Outcome probabilities below this are treated as never occurring.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// weight * exp(-decay1 |a1|^2 - decay2 |a2|^2 + pair (a1 a2 + c.c.))
struct GaussianTerm2 {
    double weight = 0.0;
    double decay1 = 0.0;
    double decay2 = 0.0;
    double pair = 0.0;

    double evaluate(Complex alpha1, Complex alpha2) const;
};

/// Optical characteristic function conditioned on an outcome: a signed sum of
/// Gaussians whose weights add up to one.
struct WeightedGaussianMix {
    Outcome outcome;
    double probability = 0.0;
    std::vector<GaussianTerm2> terms;

    double evaluate(Complex alpha1, Complex alpha2) const;
};

struct OutcomeProbabilities {
    double p00 = 0.0;
    double p01 = 0.0;
    double p10 = 0.0;
    double p11 = 0.0;

    double operator[](Outcome x) const;
    double sum() const {
        return p00 + p01 + p10 + p11;
    }
};

/// Fidelities are empty for outcomes below the degeneracy threshold.
struct FidelityReport {
    std::optional<double> f00, f01, f10, f11;
    double f_init = 0.0;
    double efficiency = 0.0;
    OutcomeProbabilities probabilities;

    std::optional<double> operator[](Outcome x) const;
};

/// The four partial vacuum projections of the atomic modes, I(.; u, v).
/// u = 1 projects atomic mode 1 on vacuum (Gaussian beta_1 integral),
/// u = 0 traces it out (beta_1 = 0); likewise v for mode 2.
struct VacuumIntegrals {
    std::array<GaussianTerm2, 4> terms;

    const GaussianTerm2 &at(int u, int v) const {
        return terms[2 * u + v];
    }
};

/// Closed-form I(.; u, v). Throws DegenerateError if B + 1 - |B12| < 1e-12.
VacuumIntegrals partial_vacuum_integrals(const GaussianChi4 &state);

OutcomeProbabilities outcome_probabilities(const GaussianChi4 &state);

/// Signed I-combination for `outcome`, normalized to one at the origin.
/// Throws DegenerateError when the outcome probability is below `threshold`.
WeightedGaussianMix conditional_chi(const GaussianChi4 &state, Outcome outcome,
                                    double threshold = kDegeneracyThreshold);

/// Average coherent-state teleportation fidelity with `mix` as the shared
/// channel, sum_k w_k / (2 + decay1_k + decay2_k - 2 pair_k).
/// Throws DivergenceError if any term has a non-positive denominator.
double teleportation_fidelity(const WeightedGaussianMix &mix);

/// Fidelity of the unconditioned input, (1/2)(1 - l^2) / (1 - l + n_th (1 - l^2)).
double initial_fidelity(const ProtocolParams &params);

/// p11 (f11 - f_init) when positive, else zero.
double efficiency(double p11, double f11, double f_init);

/// Measure the optical modes and keep the atomic ones: A <-> B, A12 <-> B12.
GaussianChi4 swap_exchange(const GaussianChi4 &state);

/// Reference curve (1 + tau) / 2 for a pure parametric pair source.
double f_param_baseline(double tau);

/// Probabilities, all defined conditional fidelities, f_init and efficiency.
FidelityReport fidelity_report(const GaussianChi4 &state, const ProtocolParams &params,
                               double threshold = kDegeneracyThreshold);

}  // namespace cvpurify

#endif  // CVPURIFY_CONDITIONING_HPP
