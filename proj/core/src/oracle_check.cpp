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

#include "cvpurify/sweep/oracle_check.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "cvpurify/conditioning.hpp"
#include "cvpurify/errors.hpp"
#include "cvpurify/oracle/fock.hpp"
#include "cvpurify/oracle/quadrature.hpp"
#include "cvpurify/sweep/config.hpp"
#include "json.hpp"

namespace cvpurify::sweep {

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct GridPlan {
    int ode_pairs;
    int quadrature_samples;
    int fock_truncation;
    std::vector<double> fock_lambdas;
    std::vector<double> bs_taus;
    std::vector<double> parametric_taus;
};

GridPlan plan_for(OracleGrid grid) {
    if (grid == OracleGrid::Full) {
        return {50, 20, 40, {0.3, 0.5}, {0.5, 1.0, 2.9}, {0.3}};
    }
    return {10, 8, 20, {0.5}, {1.0, 2.9}, {0.3}};
}

/// Records the largest deviation seen; NaN counts as infinitely large.
struct Tracker {
    OracleCheckResult result;

    void see(double a, double b) {
        const double d = std::abs(a - b);
        result.max_deviation = std::isnan(d) ? INFINITY : std::max(result.max_deviation, d);
        ++result.samples;
    }
};

template <class Body>
OracleCheckResult run_check(const std::string &name, double tolerance, Body &&body) {
    Tracker t;
    t.result.name = name;
    t.result.tolerance = tolerance;
    try {
        body(t);
    } catch (const std::exception &e) {
        t.result.error = e.what();
    }
    t.result.passed = t.result.error.empty() && t.result.max_deviation <= tolerance;
    return t.result;
}

GaussianChi4 closed_form(const ProtocolParams &p, InteractionKind kind, const OracleCheckOptions &options) {
    GaussianChi4 s = evolve_closed_form(p, kind);
    if (options.corrupt) {
        options.corrupt(s);
    }
    return s;
}

struct QuadratureSample {
    InteractionKind kind;
    ProtocolParams params;
    Complex alpha1, alpha2;
};

std::vector<QuadratureSample> quadrature_samples(int count) {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<QuadratureSample> out;
    for (int i = 0; i < count; ++i) {
        const auto kind = i % 2 == 0 ? InteractionKind::BeamSplitter : InteractionKind::Parametric;
        // Parametric occupations grow like e^{2 tau}; keep the integrands
        // within reach of the default rule.
        const double tau_max = kind == InteractionKind::BeamSplitter ? 3.0 : 1.0;
        QuadratureSample s{kind, {0.9 * unit(rng), 0.2 * unit(rng), tau_max * unit(rng)}, {}, {}};
        s.alpha1 = std::polar(0.5 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
        s.alpha2 = std::polar(0.5 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
        out.push_back(s);
    }
    return out;
}

void fock_check(Tracker &t, InteractionKind kind, const GridPlan &plan, const std::vector<double> &taus,
                const OracleCheckOptions &options) {
    const std::array<std::pair<Complex, Complex>, 2> probes{{{{0.3, 0.0}, {0.0, -0.2}}, {{0.1, 0.2}, {0.25, 0.0}}}};
    for (double lambda : plan.fock_lambdas) {
        oracle::FockState state = oracle::build_initial_fock(lambda, plan.fock_truncation);
        double elapsed = 0.0;
        for (double tau : taus) {
            state = oracle::evolve_fock(std::move(state), kind, tau - elapsed);
            elapsed = tau;
            const double norm2 = state.squared_norm();
            const GaussianChi4 cf = closed_form({lambda, 0.0, tau}, kind, options);
            const OutcomeProbabilities probs = outcome_probabilities(cf);
            for (const Outcome x : kAllOutcomes) {
                if (probs[x] < kDefaultReportFloor) {
                    continue;
                }
                const auto proj = oracle::project_outcome_fock(state, x);
                t.see(proj.probability / norm2, probs[x]);
                const WeightedGaussianMix mix = conditional_chi(cf, x, kDefaultReportFloor);
                t.see(oracle::fidelity_fock(proj.reduced), teleportation_fidelity(mix));
                for (const auto &[a1, a2] : probes) {
                    t.see(oracle::chi_fock(proj.reduced, a1, a2).real(), mix.evaluate(a1, a2));
                }
            }
        }
    }
}

}  // namespace

OracleGrid parse_oracle_grid(std::string_view text) {
    if (text == "small") {
        return OracleGrid::Small;
    }
    if (text == "full") {
        return OracleGrid::Full;
    }
    throw ConfigError("grid", "expected small or full, got '" + std::string(text) + "'");
}

bool OracleReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

std::string OracleReport::to_json() const {
    nlohmann::json j;
    j["grid"] = grid == OracleGrid::Full ? "full" : "small";
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const auto &c : checks) {
        nlohmann::json o{{"name", c.name},
                         {"max_deviation", std::isfinite(c.max_deviation) ? nlohmann::json(c.max_deviation)
                                                                          : nlohmann::json(nullptr)},
                         {"tolerance", c.tolerance},
                         {"samples", c.samples},
                         {"passed", c.passed}};
        if (!c.error.empty()) {
            o["error"] = c.error;
        }
        j["checks"].push_back(std::move(o));
    }
    return j.dump(2) + "\n";
}

OracleReport oracle_check(const OracleCheckOptions &options) {
    if (options.tolerance_override && !(*options.tolerance_override > 0.0)) {
        throw ConfigError("tolerance", "must be positive");
    }
    auto tol = [&](double fallback) { return options.tolerance_override.value_or(fallback); };
    const GridPlan plan = plan_for(options.grid);
    OracleReport report;
    report.grid = options.grid;

    report.checks.push_back(run_check("closed_form_vs_ode", tol(kOdeTolerance), [&](Tracker &t) {
        std::mt19937_64 rng(kSeed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const auto taus = arithmetic_range(0.0, 3.0, 0.25);
        for (int i = 0; i < plan.ode_pairs; ++i) {
            const double lambda = 0.95 * unit(rng);
            const double n_th = 0.2 * unit(rng);
            for (const auto kind : {InteractionKind::Parametric, InteractionKind::BeamSplitter}) {
                const GaussianChi4 init = initial_chi({lambda, n_th, 0.0}, kind);
                for (double tau : taus) {
                    const auto ode = evolve_ode(init, tau).coefficients();
                    const auto cf = closed_form({lambda, n_th, tau}, kind, options).coefficients();
                    for (std::size_t k = 0; k < cf.size(); ++k) {
                        t.see(cf[k], ode[k]);
                    }
                }
            }
        }
    }));

    const auto samples = quadrature_samples(plan.quadrature_samples);
    report.checks.push_back(run_check("vacuum_integrals_vs_quadrature", tol(kIntegralTolerance), [&](Tracker &t) {
        for (const auto &s : samples) {
            const GaussianChi4 cf = closed_form(s.params, s.kind, options);
            const VacuumIntegrals ints = partial_vacuum_integrals(cf);
            for (int u = 0; u < 2; ++u) {
                for (int v = 0; v < 2; ++v) {
                    t.see(ints.at(u, v).evaluate(s.alpha1, s.alpha2),
                          oracle::quadrature_I(cf, s.alpha1, s.alpha2, u, v));
                }
            }
        }
    }));

    report.checks.push_back(run_check("fidelity_vs_quadrature", tol(kQuadratureFidelityTolerance), [&](Tracker &t) {
        for (const auto &s : samples) {
            const GaussianChi4 cf = closed_form(s.params, s.kind, options);
            const OutcomeProbabilities probs = outcome_probabilities(cf);
            for (const Outcome x : kAllOutcomes) {
                if (probs[x] < kDefaultReportFloor) {
                    continue;
                }
                const WeightedGaussianMix mix = conditional_chi(cf, x, kDefaultReportFloor);
                t.see(teleportation_fidelity(mix), oracle::quadrature_fidelity(mix));
            }
        }
    }));

    report.checks.push_back(run_check("fock_beam_splitter", tol(kFockBeamSplitterTolerance), [&](Tracker &t) {
        fock_check(t, InteractionKind::BeamSplitter, plan, plan.bs_taus, options);
    }));
    report.checks.push_back(run_check("fock_parametric", tol(kFockParametricTolerance), [&](Tracker &t) {
        fock_check(t, InteractionKind::Parametric, plan, plan.parametric_taus, options);
    }));
    return report;
}

}  // namespace cvpurify::sweep
