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

#ifndef CVPURIFY_SWEEP_SWEEP_HPP
#define CVPURIFY_SWEEP_SWEEP_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvpurify/chi.hpp"
#include "cvpurify/conditioning.hpp"
#include "cvpurify/sweep/config.hpp"

namespace cvpurify::sweep {

struct SweepRow {
    InteractionKind kind = InteractionKind::BeamSplitter;
    bool swap = false;
    double lambda = 0.0;
    double n_th = 0.0;
    double tau = 0.0;
    OutcomeProbabilities probabilities;
    std::optional<double> f00, f01, f10, f11;
    double f_init = 0.0;
    double efficiency = 0.0;
};

/// Full report for one grid point. Fidelities of outcomes with probability
/// below `p_min` are left empty.
SweepRow evaluate_point(InteractionKind kind, bool swap, const ProtocolParams &params, double p_min,
                        const EvolutionOptions &options = {});

/// Evaluates every grid point in lambda-major order and validates each row.
std::vector<SweepRow> run_sweep(const SweepConfig &config);

/// Throws InvariantError if a row breaks probability closure, F01 = F10,
/// fidelity range or efficiency sign.
void validate_row(const SweepRow &row);

/// Twelve significant digits, locale independent.
std::string format_number(double value);

/// Header row naming every SweepRow field; undefined fidelities are empty cells.
void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);
/// Array of objects with the CSV field names; undefined fidelities are null.
void write_json(std::ostream &out, const std::vector<SweepRow> &rows);

/// Writes rows to config.output_path and a sibling `<output>.manifest.json`.
/// Returns the paths written. Throws IoError on failure.
std::vector<std::filesystem::path> write_sweep_output(const SweepConfig &config, const std::vector<SweepRow> &rows);

struct TimeWindow {
    double lo = 0.0;
    double hi = 0.0;
};

struct OptimalTime {
    double tau_star = 0.0;
    double f11_star = 0.0;
    double p11_star = 0.0;
};

inline constexpr double kDefaultCoarseStep = 0.01;

/// Maximizes F11 over tau in `window`, restricted to p11 >= p_min: coarse scan
/// at `coarse_step`, then golden-section refinement around the best sample.
/// Parametric windows are clipped to the time cap. Throws
/// NoAdmissiblePointError when no sample reaches p_min.
OptimalTime find_optimal_time(InteractionKind kind, bool swap, double lambda, double n_th, TimeWindow window,
                              double p_min = kDefaultReportFloor, double coarse_step = kDefaultCoarseStep,
                              const EvolutionOptions &options = {});

/// JSON manifest shared by sweeps and figure emitters.
std::string manifest_json(const std::string &run_kind, const std::string &canonical_parameters,
                          const std::vector<std::filesystem::path> &files);

/// Hex SHA-256 of `text`.
std::string sha256_hex(const std::string &text);

}  // namespace cvpurify::sweep

#endif  // CVPURIFY_SWEEP_SWEEP_HPP
