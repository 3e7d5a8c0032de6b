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

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvpurify/chi.hpp"
#include "cvpurify/conditioning.hpp"
#include "cvpurify/oracle/fock.hpp"
#include "cvpurify/oracle/quadrature.hpp"
#include "cvpurify/sweep/config.hpp"
#include "cvpurify/sweep/figures.hpp"
#include "cvpurify/sweep/sweep.hpp"

using namespace cvpurify;
using namespace cvpurify::sweep;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double time_limit_s;  // <= 0 means no limit
    std::function<Verdict()> run;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<double> default_lambdas() {
    return arithmetic_range(0.0, 0.95, 0.01);
}

const std::vector<double> kDefaultNth{0.0, 0.01, 0.05, 0.1};

std::vector<double> taus_for(InteractionKind kind) {
    // Beam splitter: one full period (0, 2 pi). Parametric: up to the time cap.
    std::vector<double> out;
    const double stop = kind == InteractionKind::BeamSplitter ? 2 * kPi : kDefaultParametricTauCap + 1e-9;
    for (int i = 1; i * 0.01 < stop; ++i) {
        out.push_back(i * 0.01);
    }
    return out;
}

Verdict closed_form_vs_ode() {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto taus = arithmetic_range(0.0, 3.0, 0.1);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double lambda = 0.95 * unit(rng);
        const double n = 0.2 * unit(rng);
        for (auto kind : {InteractionKind::Parametric, InteractionKind::BeamSplitter}) {
            const GaussianChi4 init = initial_chi({lambda, n, 0.0}, kind);
            for (double tau : taus) {
                const auto ode = evolve_ode(init, tau).coefficients();
                const auto cf = evolve_closed_form({lambda, n, tau}, kind).coefficients();
                for (std::size_t k = 0; k < cf.size(); ++k) {
                    worst = std::max(worst, std::abs(cf[k] - ode[k]));
                }
            }
        }
    }
    return {worst <= 1e-8, "max coefficient deviation " + fmt("%.3g", worst) + " (limit 1e-8)"};
}

Verdict zero_time_identity() {
    double worst = 0.0;
    bool exact = true;
    for (auto kind : {InteractionKind::Parametric, InteractionKind::BeamSplitter}) {
        for (double lambda : default_lambdas()) {
            for (double n : kDefaultNth) {
                const ProtocolParams params{lambda, n, 0.0};
                const FidelityReport r = fidelity_report(evolve_closed_form(params, kind), params);
                exact = exact && r.probabilities.p00 == 1.0 && r.probabilities.p01 == 0.0 &&
                        r.probabilities.p10 == 0.0 && r.probabilities.p11 == 0.0;
                worst = r.f00 ? std::max(worst, std::abs(*r.f00 - r.f_init)) : INFINITY;
            }
        }
    }
    return {exact && worst <= 1e-12, "max |F00 - F_init| " + fmt("%.3g", worst) +
                                         (exact ? ", p = (1,0,0,0) exactly" : ", p differs from (1,0,0,0)")};
}

Verdict probability_closure() {
    double worst = 0.0;
    long points = 0;
    long asymmetric = 0;
    for (auto kind : {InteractionKind::Parametric, InteractionKind::BeamSplitter}) {
        const auto taus = taus_for(kind);
        for (bool swap : {false, true}) {
            for (double lambda : default_lambdas()) {
                for (double n : kDefaultNth) {
                    for (double tau : taus) {
                        GaussianChi4 s = evolve_closed_form({lambda, n, tau}, kind);
                        if (swap) {
                            s = swap_exchange(s);
                        }
                        const auto p = outcome_probabilities(s);
                        worst = std::max(worst, std::abs(p.sum() - 1.0));
                        asymmetric += p.p01 != p.p10;
                        ++points;
                    }
                }
            }
        }
    }
    return {worst <= 1e-12 && asymmetric == 0, std::to_string(points) + " grid points, max |sum p - 1| " +
                                                   fmt("%.3g", worst) + ", p01 != p10 at " +
                                                   std::to_string(asymmetric)};
}

Verdict parametric_never_beats_initial() {
    double worst = -INFINITY;
    int defined = 0;
    for (double tau : arithmetic_range(0.01, 2.0, 0.01)) {
        const SweepRow r = evaluate_point(InteractionKind::Parametric, false, {0.5, 0.0, tau}, kDefaultReportFloor);
        for (const auto &f : {r.f00, r.f01, r.f10, r.f11}) {
            if (f) {
                worst = std::max(worst, *f);
                ++defined;
            }
        }
    }
    return {defined > 0 && worst <= 0.75 + 1e-10,
            std::to_string(defined) + " defined fidelities, max " + fmt("%.9f", worst) + " (F_init 0.75)"};
}

Verdict optimal_time_near_pi() {
    const OptimalTime r =
        find_optimal_time(InteractionKind::BeamSplitter, false, 0.5, 0.0, {0.1, 2 * kPi - 0.1}, 1e-6);
    const bool ok = std::abs(r.tau_star - kPi) < 1.0 && r.f11_star > 0.75 && r.p11_star >= 1e-6;
    return {ok, "tau* " + fmt("%.6f", r.tau_star) + ", F11* " + fmt("%.6f", r.f11_star) + ", p11* " +
                    fmt("%.4g", r.p11_star)};
}

Verdict efficiency_region_shrinks() {
    auto positive_cells = [](FigureId id) {
        const FigureTable t = figure_table(id);
        const std::size_t col = t.column("efficiency");
        long count = 0;
        for (const auto &row : t.rows) {
            count += *row[col] > 0.0;
        }
        return count;
    };
    const long clean = positive_cells(FigureId::Fig4a);
    const long thermal = positive_cells(FigureId::Fig4b);
    return {clean > 0 && thermal < clean,
            "positive cells: " + std::to_string(clean) + " at n_th 0, " + std::to_string(thermal) + " at n_th 0.05"};
}

Verdict full_swap() {
    const GaussianChi4 s = evolve_closed_form({0.5, 0.0, kPi / 2}, InteractionKind::BeamSplitter);
    const auto p = outcome_probabilities(s);
    const double dp = std::max({std::abs(p.p00 - 0.75), std::abs(p.p01), std::abs(p.p10), std::abs(p.p11 - 0.25)});
    const double f00 = teleportation_fidelity(conditional_chi(s, {0, 0}));
    const double df = std::abs(f00 - 0.5);
    return {dp <= 1e-12 && df <= 1e-12, "max |p - (3/4,0,0,1/4)| " + fmt("%.3g", dp) + ", |F00 - 1/2| " +
                                            fmt("%.3g", df)};
}

Verdict quadrature_oracle() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_i = 0.0;
    double worst_f = 0.0;
    int fidelities = 0;
    for (int i = 0; i < 20; ++i) {
        const auto kind = i % 2 ? InteractionKind::Parametric : InteractionKind::BeamSplitter;
        const double tau = kind == InteractionKind::Parametric ? unit(rng) : 3.0 * unit(rng);
        const GaussianChi4 s = evolve_closed_form({0.9 * unit(rng), 0.2 * unit(rng), tau}, kind);
        const Complex a1 = std::polar(0.5 * unit(rng), 2 * kPi * unit(rng));
        const Complex a2 = std::polar(0.5 * unit(rng), 2 * kPi * unit(rng));
        const VacuumIntegrals ints = partial_vacuum_integrals(s);
        for (int u = 0; u < 2; ++u) {
            for (int v = 0; v < 2; ++v) {
                worst_i = std::max(worst_i,
                                   std::abs(ints.at(u, v).evaluate(a1, a2) - oracle::quadrature_I(s, a1, a2, u, v)));
            }
        }
        const auto p = outcome_probabilities(s);
        for (Outcome x : kAllOutcomes) {
            if (p[x] < kDefaultReportFloor) {
                continue;
            }
            const auto mix = conditional_chi(s, x, kDefaultReportFloor);
            worst_f = std::max(worst_f, std::abs(teleportation_fidelity(mix) - oracle::quadrature_fidelity(mix)));
            ++fidelities;
        }
    }
    return {worst_i <= 1e-6 && worst_f <= 1e-6, "20 states: max I deviation " + fmt("%.3g", worst_i) + ", max F deviation " +
                                                    fmt("%.3g", worst_f) + " over " + std::to_string(fidelities) +
                                                    " fidelities"};
}

Verdict fock_oracle() {
    constexpr int kTruncation = 40;
    double worst_bs = 0.0;
    double worst_par = 0.0;
    auto compare = [](oracle::FockState &state, double lambda, double tau, InteractionKind kind, double &worst) {
        const GaussianChi4 cf = evolve_closed_form({lambda, 0.0, tau}, kind);
        const auto p = outcome_probabilities(cf);
        const double norm2 = state.squared_norm();
        for (Outcome x : kAllOutcomes) {
            if (p[x] < kDefaultReportFloor) {
                continue;
            }
            const auto proj = oracle::project_outcome_fock(state, x);
            worst = std::max(worst, std::abs(proj.probability / norm2 - p[x]));
            const double f_cf = teleportation_fidelity(conditional_chi(cf, x, kDefaultReportFloor));
            worst = std::max(worst, std::abs(oracle::fidelity_fock(proj.reduced) - f_cf));
        }
    };
    for (double lambda : {0.3, 0.5}) {
        oracle::FockState state = oracle::build_initial_fock(lambda, kTruncation);
        double elapsed = 0.0;
        for (double tau : {0.5, 1.0, 2.9}) {
            state = oracle::evolve_fock(std::move(state), InteractionKind::BeamSplitter, tau - elapsed);
            elapsed = tau;
            compare(state, lambda, tau, InteractionKind::BeamSplitter, worst_bs);
        }
        oracle::FockState par =
            oracle::evolve_fock(oracle::build_initial_fock(lambda, kTruncation), InteractionKind::Parametric, 0.3);
        compare(par, lambda, 0.3, InteractionKind::Parametric, worst_par);
    }
    return {worst_bs <= 1e-4 && worst_par <= 1e-3, "N=40: beam splitter max deviation " + fmt("%.3g", worst_bs) +
                                                       " (limit 1e-4), parametric " + fmt("%.3g", worst_par) +
                                                       " (limit 1e-3)"};
}

Verdict swap_variant() {
    std::vector<int> counts;
    double best_gain = -INFINITY;
    for (double lambda : {0.1, 0.3, 0.5}) {
        const double f_init = initial_fidelity({lambda, 0.0, 0.0});
        int count = 0;
        for (double tau : arithmetic_range(0.01, 0.5, 0.01)) {
            const SweepRow r = evaluate_point(InteractionKind::Parametric, true, {lambda, 0.0, tau}, kDefaultReportFloor);
            if (r.f11 && *r.f11 > f_init) {
                ++count;
                if (lambda == 0.1) {
                    best_gain = std::max(best_gain, *r.f11 - f_init);
                }
            }
        }
        counts.push_back(count);
    }
    const bool ok = counts[0] > 0 && counts[1] <= counts[0] && counts[2] <= counts[1];
    return {ok, "qualifying tau points for lambda 0.1/0.3/0.5: " + std::to_string(counts[0]) + "/" +
                    std::to_string(counts[1]) + "/" + std::to_string(counts[2]) + ", best F11 - F_init at 0.1 " +
                    fmt("%.4g", best_gain)};
}

Verdict deterministic_csv() {
    const auto dir = std::filesystem::temp_directory_path() / "cvpurify_acceptance";
    std::filesystem::create_directories(dir);
    auto run = [&](const std::string &name) {
        SweepConfig c;
        c.kind = InteractionKind::BeamSplitter;
        c.lambda_grid = arithmetic_range(0.0, 0.95, 0.05);
        c.nth_grid = {0.0, 0.05};
        c.tau_grid = arithmetic_range(0.0, 6.28, 0.02);
        c.output_path = dir / name;
        write_sweep_output(c, run_sweep(c));
        std::ifstream in(c.output_path, std::ios::binary);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const std::string a = run("first.csv");
    const std::string b = run("second.csv");
    return {!a.empty() && a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "closed form matches ODE integration", 10.0, closed_form_vs_ode},
        {2, "zero-time identity", 0.0, zero_time_identity},
        {3, "probability closure and single-click symmetry", 0.0, probability_closure},
        {4, "parametric fidelities never exceed the initial fidelity", 5.0, parametric_never_beats_initial},
        {5, "beam-splitter optimal time close to pi with F11 above F_init", 0.0, optimal_time_near_pi},
        {6, "efficiency region exists and shrinks with thermal noise", 0.0, efficiency_region_shrinks},
        {7, "full-swap analytics", 0.0, full_swap},
        {8, "closed forms match Gauss-Hermite quadrature", 30.0, quadrature_oracle},
        {9, "closed forms match truncated Fock simulation", 300.0, fock_oracle},
        {10, "swap variant gives a small gain that shrinks with lambda", 0.0, swap_variant},
        {11, "sweep CSV is byte-identical across runs", 0.0, deterministic_csv},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs > c.time_limit_s) {
            v.passed = false;
            v.detail += ", over the " + fmt("%.0f", c.time_limit_s) + " s limit";
        }
        failures += !v.passed;
        std::printf("[%s] criterion %d: %s -- %s (%.2f s)\n", v.passed ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
