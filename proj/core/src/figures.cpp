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

#include "cvpurify/sweep/figures.hpp"

#include <fstream>
#include <numbers>
#include <ostream>

#include "cvpurify/errors.hpp"
#include "cvpurify/sweep/sweep.hpp"
#include "json.hpp"

namespace cvpurify::sweep {

using nlohmann::json;

namespace {

constexpr std::string_view kNames[] = {"fig2", "fig3", "fig4a", "fig4b", "fig5", "fig6"};

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGridStep = 0.01;
constexpr double kLambdaMax = 0.95;
constexpr double kFig3WindowMargin = 0.1;

std::vector<double> tau_open_two_pi() {
    // Interior of (0, 2 pi) at the grid step.
    std::vector<double> out;
    for (int i = 1; static_cast<double>(i) * kGridStep < kTwoPi; ++i) {
        out.push_back(static_cast<double>(i) * kGridStep);
    }
    return out;
}

FigureTable fig2() {
    FigureTable t{{"tau", "f00", "f01", "f11", "f_init"}, {}, {}};
    const double lambda = 0.5;
    const auto taus = arithmetic_range(0.0, 2.0, kGridStep);
    for (double tau : taus) {
        const SweepRow r = evaluate_point(InteractionKind::Parametric, false, {lambda, 0.0, tau}, kDefaultReportFloor);
        validate_row(r);
        t.rows.push_back({tau, r.f00, r.f01, r.f11, r.f_init});
    }
    t.parameters_json = json{{"kind", "parametric"}, {"swap", false},          {"lambda", std::vector<double>{lambda}},
                             {"n_th", std::vector<double>{0.0}},        {"tau", taus},            {"p_min", kDefaultReportFloor}}
                            .dump();
    return t;
}

FigureTable fig3() {
    FigureTable t{{"n_th", "lambda", "tau_star", "p11", "f00", "f01", "f11", "f_init"}, {}, {}};
    const std::vector<double> nths{0.0, 0.01, 0.05, 0.1};
    const auto lambdas = arithmetic_range(0.0, kLambdaMax, kGridStep);
    const TimeWindow window{kFig3WindowMargin, kTwoPi - kFig3WindowMargin};
    for (double n : nths) {
        for (double lambda : lambdas) {
            try {
                const OptimalTime opt = find_optimal_time(InteractionKind::BeamSplitter, false, lambda, n, window);
                const SweepRow r =
                    evaluate_point(InteractionKind::BeamSplitter, false, {lambda, n, opt.tau_star}, kDefaultReportFloor);
                validate_row(r);
                t.rows.push_back({n, lambda, opt.tau_star, opt.p11_star, r.f00, r.f01, opt.f11_star, r.f_init});
            } catch (const NoAdmissiblePointError &) {
                const double f_init = initial_fidelity({lambda, n, 0.0});
                t.rows.push_back({n, lambda, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                  f_init});
            }
        }
    }
    t.parameters_json = json{{"kind", "beam-splitter"},
                             {"swap", false},
                             {"lambda", lambdas},
                             {"n_th", nths},
                             {"window", std::vector<double>{window.lo, window.hi}},
                             {"coarse_step", kDefaultCoarseStep},
                             {"p_min", kDefaultReportFloor}}
                            .dump();
    return t;
}

FigureTable fig4(double n_th) {
    FigureTable t{{"tau", "lambda", "p11", "f11", "f_init", "efficiency"}, {}, {}};
    const auto lambdas = arithmetic_range(0.0, kLambdaMax, kGridStep);
    const auto taus = tau_open_two_pi();
    for (double lambda : lambdas) {
        for (double tau : taus) {
            const SweepRow r =
                evaluate_point(InteractionKind::BeamSplitter, false, {lambda, n_th, tau}, kDefaultReportFloor);
            validate_row(r);
            t.rows.push_back({tau, lambda, r.probabilities.p11, r.f11, r.f_init, r.efficiency});
        }
    }
    t.parameters_json = json{{"kind", "beam-splitter"}, {"swap", false}, {"lambda", lambdas},
                             {"n_th", std::vector<double>{n_th}},          {"tau", taus},   {"p_min", kDefaultReportFloor}}
                            .dump();
    return t;
}

FigureTable fig5() {
    FigureTable t{{"lambda", "n_th", "tau", "f00", "f01", "f11", "f_init", "f_param"}, {}, {}};
    const std::vector<double> lambdas{0.1, 0.3, 0.5};
    const std::vector<double> nths{0.0, 0.05};
    const auto taus = arithmetic_range(0.0, 1.0, kGridStep);
    for (double lambda : lambdas) {
        for (double n : nths) {
            for (double tau : taus) {
                const SweepRow r =
                    evaluate_point(InteractionKind::Parametric, true, {lambda, n, tau}, kDefaultReportFloor);
                validate_row(r);
                t.rows.push_back({lambda, n, tau, r.f00, r.f01, r.f11, r.f_init, f_param_baseline(tau)});
            }
        }
    }
    t.parameters_json = json{{"kind", "parametric"}, {"swap", true}, {"lambda", lambdas},
                             {"n_th", nths},         {"tau", taus},  {"p_min", kDefaultReportFloor}}
                            .dump();
    return t;
}

FigureTable fig6() {
    FigureTable t{{"lambda", "tau", "f11", "f_init", "f_param"}, {}, {}};
    const std::vector<double> lambdas{0.05, 0.1, 0.15, 0.2};
    const auto taus = arithmetic_range(0.0, 1.0, kGridStep);
    for (double lambda : lambdas) {
        for (double tau : taus) {
            const SweepRow r = evaluate_point(InteractionKind::Parametric, true, {lambda, 0.0, tau}, kDefaultReportFloor);
            validate_row(r);
            t.rows.push_back({lambda, tau, r.f11, r.f_init, f_param_baseline(tau)});
        }
    }
    t.parameters_json = json{{"kind", "parametric"}, {"swap", true}, {"lambda", lambdas},
                             {"n_th", std::vector<double>{0.0}},        {"tau", taus},  {"p_min", kDefaultReportFloor}}
                            .dump();
    return t;
}

}  // namespace

std::string_view to_string(FigureId id) {
    return kNames[static_cast<int>(id)];
}

FigureId parse_figure_id(std::string_view text) {
    for (int i = 0; i < static_cast<int>(std::size(kNames)); ++i) {
        if (kNames[i] == text) {
            return static_cast<FigureId>(i);
        }
    }
    throw ConfigError("figure", "unknown figure id '" + std::string(text) + "'");
}

std::size_t FigureTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column " + std::string(name));
}

FigureTable figure_table(FigureId id) {
    switch (id) {
        case FigureId::Fig2:
            return fig2();
        case FigureId::Fig3:
            return fig3();
        case FigureId::Fig4a:
            return fig4(0.0);
        case FigureId::Fig4b:
            return fig4(0.05);
        case FigureId::Fig5:
            return fig5();
        case FigureId::Fig6:
            return fig6();
    }
    throw ConfigError("figure", "unhandled figure id");
}

void write_table_csv(std::ostream &out, const FigureTable &table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out << ',';
            }
            if (row[i]) {
                out << format_number(*row[i]);
            }
        }
        out << '\n';
    }
}

std::string gnuplot_script(FigureId id) {
    const std::string name(to_string(id));
    std::string s =
        "# Usage: gnuplot " + name + ".gp  (writes " + name + ".png)\n"
        "set datafile separator ','\n"
        "set datafile missing ''\n"
        "set terminal pngcairo size 900,650\n"
        "set output '" + name + ".png'\n"
        "set key autotitle columnhead\n";
    switch (id) {
        case FigureId::Fig2:
            s += "set xlabel 'tau'\nset ylabel 'fidelity'\n"
                 "plot 'fig2.csv' u 1:2 w l t 'F00', '' u 1:3 w l t 'F01', '' u 1:4 w l t 'F11', "
                 "'' u 1:5 w l dt 2 t 'F_init'\n";
            break;
        case FigureId::Fig3:
            s += "set xlabel 'lambda'\nset ylabel 'fidelity at optimal time'\n"
                 "plot for [n in '0 0.01 0.05 0.1'] 'fig3.csv' u ($1==n+0 ? $2 : 1/0):7 w l t 'F11, n_th='.n, \\\n"
                 "     'fig3.csv' u ($1==0 ? $2 : 1/0):8 w l dt 2 t 'F_init, n_th=0'\n";
            break;
        case FigureId::Fig4a:
        case FigureId::Fig4b:
            s += "set xlabel 'tau'\nset ylabel 'lambda'\nset cblabel 'efficiency'\n"
                 "set view map\n"
                 "plot '" + name + ".csv' u 1:2:6 with image t ''\n";
            break;
        case FigureId::Fig5:
            s += "set xlabel 'tau'\nset ylabel 'fidelity'\n"
                 "plot for [l in '0.1 0.3 0.5'] 'fig5.csv' u ($1==l+0 && $2==0 ? $3 : 1/0):6 w l "
                 "t 'F11, lambda='.l, \\\n"
                 "     'fig5.csv' u ($1==0.1 && $2==0 ? $3 : 1/0):8 w l dt 2 t 'F_param'\n";
            break;
        case FigureId::Fig6:
            s += "set xlabel 'tau'\nset ylabel 'fidelity'\n"
                 "plot for [l in '0.05 0.1 0.15 0.2'] 'fig6.csv' u ($1==l+0 ? $2 : 1/0):3 w l "
                 "t 'F11, lambda='.l, \\\n"
                 "     'fig6.csv' u ($1==0.05 ? $2 : 1/0):5 w l dt 2 t 'F_param'\n";
            break;
    }
    return s;
}

std::vector<std::filesystem::path> emit_figure_data(FigureId id, const std::filesystem::path &out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());
    }
    const FigureTable table = figure_table(id);
    const std::string name(to_string(id));
    const auto csv = out_dir / (name + ".csv");
    const auto gp = out_dir / (name + ".gp");
    const auto manifest = out_dir / (name + ".manifest.json");

    auto write = [](const std::filesystem::path &p, auto &&body) {
        std::ofstream out(p, std::ios::binary);
        if (!out) {
            throw IoError("cannot open " + p.string());
        }
        body(out);
        if (!out.flush()) {
            throw IoError("write failed for " + p.string());
        }
    };
    write(csv, [&](std::ostream &o) { write_table_csv(o, table); });
    write(gp, [&](std::ostream &o) { o << gnuplot_script(id); });
    json params = json::parse(table.parameters_json);
    params["figure"] = name;
    params["columns"] = table.columns;
    write(manifest, [&](std::ostream &o) { o << manifest_json("figure", params.dump(), {csv, gp}); });
    return {csv, gp, manifest};
}

}  // namespace cvpurify::sweep
