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

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cvpurify/errors.hpp"
#include "cvpurify/sweep/figures.hpp"
#include "cvpurify/sweep/oracle_check.hpp"
#include "cvpurify/sweep/sweep.hpp"
#include "cvpurify/version.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kValidation = 1,
    kNumerical = 2,
    kIo = 3,
};

using namespace cvpurify;
using namespace cvpurify::sweep;

int cmd_sweep(const std::string &config_path) {
    const SweepConfig config = load_sweep_config(config_path);
    const auto rows = run_sweep(config);
    for (const auto &p : write_sweep_output(config, rows)) {
        std::cout << p.string() << '\n';
    }
    return kOk;
}

struct OptimalTimeArgs {
    std::string kind;
    bool swap = false;
    double lambda = 0.0;
    double n_th = 0.0;
    double lo = 0.1;
    double hi = 2.0 * std::numbers::pi - 0.1;
    double p_min = kDefaultReportFloor;
    double coarse_step = kDefaultCoarseStep;
};

int cmd_optimal_time(const OptimalTimeArgs &a) {
    const InteractionKind kind = parse_interaction_kind(a.kind);
    const OptimalTime r = find_optimal_time(kind, a.swap, a.lambda, a.n_th, {a.lo, a.hi}, a.p_min, a.coarse_step);
    const double f_init = initial_fidelity({a.lambda, a.n_th, 0.0});
    std::cout << "{\"kind\": \"" << to_string(kind) << "\", \"swap\": " << (a.swap ? "true" : "false")
              << ", \"lambda\": " << format_number(a.lambda) << ", \"n_th\": " << format_number(a.n_th)
              << ", \"tau_star\": " << format_number(r.tau_star) << ", \"f11_star\": " << format_number(r.f11_star)
              << ", \"p11_star\": " << format_number(r.p11_star) << ", \"f_init\": " << format_number(f_init)
              << "}\n";
    return kOk;
}

int cmd_figure(const std::string &id, const std::string &out_dir) {
    for (const auto &p : emit_figure_data(parse_figure_id(id), out_dir)) {
        std::cout << p.string() << '\n';
    }
    return kOk;
}

int cmd_oracle_check(const std::string &grid, std::optional<double> tolerance) {
    OracleCheckOptions options;
    options.grid = parse_oracle_grid(grid);
    options.tolerance_override = tolerance;
    const OracleReport report = oracle_check(options);
    std::cout << report.to_json();
    return report.passed() ? kOk : kNumerical;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Conditional entanglement purification with atomic ensembles: sweeps, figures and oracle checks"};
    app.require_subcommand(1);

    std::string config_path;
    auto *sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep described by a JSON config");
    sweep_cmd->add_option("--config", config_path, "Sweep configuration file")->required();

    OptimalTimeArgs ot;
    auto *ot_cmd = app.add_subcommand("optimal-time", "Maximize F11 over the interaction time");
    ot_cmd->add_option("--kind", ot.kind, "parametric or beam-splitter")->required();
    ot_cmd->add_flag("--swap", ot.swap, "Measure the optical modes and keep the atomic ones");
    ot_cmd->add_option("--lambda", ot.lambda, "Squeezing parameter in [0, 1)")->required();
    ot_cmd->add_option("--nth", ot.n_th, "Thermal photons per mode")->required();
    ot_cmd->add_option("--tau-min", ot.lo, "Lower end of the time window")->capture_default_str();
    ot_cmd->add_option("--tau-max", ot.hi, "Upper end of the time window")->capture_default_str();
    ot_cmd->add_option("--p-min", ot.p_min, "Smallest admissible p11")->capture_default_str();
    ot_cmd->add_option("--coarse-step", ot.coarse_step, "Step of the seeding grid")->capture_default_str();

    std::string figure_id;
    std::string figure_out;
    auto *fig_cmd = app.add_subcommand("figure", "Write a figure dataset, gnuplot script and manifest");
    fig_cmd->add_option("id", figure_id, "fig2, fig3, fig4a, fig4b, fig5 or fig6")->required();
    fig_cmd->add_option("--out", figure_out, "Output directory")->required();

    std::string grid = "small";
    std::optional<double> tolerance;
    auto *oc_cmd = app.add_subcommand("oracle-check", "Cross-check closed forms against brute-force oracles");
    oc_cmd->add_option("--grid", grid, "small or full")->capture_default_str();
    oc_cmd->add_option("--tolerance", tolerance, "Replace every per-check tolerance");

    auto *version_cmd = app.add_subcommand("version", "Print the tool version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kValidation;
    }

    try {
        if (*sweep_cmd) {
            return cmd_sweep(config_path);
        }
        if (*ot_cmd) {
            return cmd_optimal_time(ot);
        }
        if (*fig_cmd) {
            return cmd_figure(figure_id, figure_out);
        }
        if (*oc_cmd) {
            return cmd_oracle_check(grid, tolerance);
        }
        if (*version_cmd) {
            std::cout << "cvpurify " << kVersion << '\n';
            return kOk;
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kValidation;
    } catch (const DomainError &e) {
        std::cerr << "invalid parameter: " << e.what() << '\n';
        return kValidation;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    return kValidation;
}
