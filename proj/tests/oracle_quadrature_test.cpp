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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cvpurify/errors.hpp"

using namespace cvpurify;
using namespace cvpurify::oracle;

TEST(QuadratureSpec, validate) {
    QuadratureSpec{}.validate();
    QuadratureSpec{8}.validate();
    QuadratureSpec{128}.validate();
    ASSERT_THROW(QuadratureSpec{7}.validate(), DomainError);
    ASSERT_THROW(QuadratureSpec{129}.validate(), DomainError);
}

TEST(QuadratureI, no_projection_evaluates_chi_at_zero_beta) {
    const GaussianChi4 s = evolve_closed_form({0.5, 0.05, 0.9}, InteractionKind::BeamSplitter);
    const Complex a1{0.2, -0.1}, a2{0.05, 0.3};
    EXPECT_DOUBLE_EQ(quadrature_I(s, a1, a2, 0, 0), std::exp(chi_exponent(s, a1, a2, 0, 0)));
}

TEST(QuadratureI, unit_integral_at_zero_time) {
    const GaussianChi4 s = initial_chi({0.5, 0.0, 0.0}, InteractionKind::Parametric);
    EXPECT_NEAR(quadrature_I(s, 0, 0, 1, 1), 1.0, 1e-13);
}

TEST(QuadratureI, parametric_double_projection_matches_closed_form) {
    const GaussianChi4 s = evolve_closed_form({0.5, 0.0, 0.4}, InteractionKind::Parametric);
    const Complex a1{0.3, 0.0}, a2{0.0, -0.2};
    const double closed = partial_vacuum_integrals(s).at(1, 1).evaluate(a1, a2);
    EXPECT_NEAR(quadrature_I(s, a1, a2, 1, 1), closed, 1e-6);
}

TEST(QuadratureI, every_projection_matches_closed_form_on_random_states) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 6; ++i) {
        const auto kind = i % 2 ? InteractionKind::Parametric : InteractionKind::BeamSplitter;
        const double tau = kind == InteractionKind::Parametric ? unit(rng) : 3.0 * unit(rng);
        const GaussianChi4 s = evolve_closed_form({0.9 * unit(rng), 0.2 * unit(rng), tau}, kind);
        const Complex a1 = std::polar(0.5 * unit(rng), 6.28 * unit(rng));
        const Complex a2 = std::polar(0.5 * unit(rng), 6.28 * unit(rng));
        const VacuumIntegrals ints = partial_vacuum_integrals(s);
        for (int u = 0; u < 2; ++u) {
            for (int v = 0; v < 2; ++v) {
                EXPECT_NEAR(quadrature_I(s, a1, a2, u, v, QuadratureSpec{16}), ints.at(u, v).evaluate(a1, a2), 1e-6)
                    << "sample " << i << " u " << u << " v " << v;
            }
        }
    }
}

TEST(QuadratureI, rejects_bad_bits) {
    const GaussianChi4 s = initial_chi({0.5, 0.0, 0.0}, InteractionKind::Parametric);
    ASSERT_THROW(quadrature_I(s, 0, 0, 2, 0), DomainError);
}

TEST(QuadratureI, reports_non_convergence) {
    const GaussianChi4 s = evolve_closed_form({0.9, 0.2, 2.0}, InteractionKind::Parametric);
    ASSERT_THROW(quadrature_I(s, 0.4, 0.4, 1, 0, QuadratureSpec{8, 1e-15}), ConvergenceError);
}

TEST(QuadratureFidelity, vacuum_term) {
    const WeightedGaussianMix vac{{0, 0}, 1.0, {GaussianTerm2{1.0, 0.0, 0.0, 0.0}}};
    EXPECT_NEAR(quadrature_fidelity(vac), 0.5, 1e-14);
}

TEST(QuadratureFidelity, zero_time_mixture_gives_initial_fidelity) {
    const GaussianChi4 s = initial_chi({0.5, 0.0, 0.0}, InteractionKind::BeamSplitter);
    EXPECT_NEAR(quadrature_fidelity(conditional_chi(s, {0, 0})), 0.75, 1e-8);
}

TEST(QuadratureFidelity, matches_closed_form_sum_on_random_mixtures) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const auto kind = i % 2 ? InteractionKind::Parametric : InteractionKind::BeamSplitter;
        const double tau = kind == InteractionKind::Parametric ? unit(rng) : 6.0 * unit(rng);
        const GaussianChi4 s = evolve_closed_form({0.9 * unit(rng), 0.2 * unit(rng), tau}, kind);
        const auto p = outcome_probabilities(s);
        for (Outcome x : kAllOutcomes) {
            if (p[x] < 1e-6) {
                continue;
            }
            const auto mix = conditional_chi(s, x);
            EXPECT_NEAR(quadrature_fidelity(mix), teleportation_fidelity(mix), 1e-8) << i << " " << x.label();
        }
    }
}
