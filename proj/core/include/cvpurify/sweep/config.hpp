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

#ifndef CVPURIFY_SWEEP_CONFIG_HPP
#define CVPURIFY_SWEEP_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cvpurify/chi.hpp"

namespace cvpurify::sweep {

inline constexpr int kConfigSchemaVersion = 1;
inline constexpr double kDefaultReportFloor = 1e-6;

enum class OutputFormat { Csv, Json };

/// Declarative sweep over (lambda, n_th, tau). Rows come out lambda-major,
/// then n_th, then tau.
///
/// JSON schema (version 1); unknown keys are rejected:
///
///   {
///     "schema_version": 1,
///     "kind": "parametric" | "beam-splitter",
///     "swap": false,                      // optional
///     "lambda": [0.5] | {"start": 0, "stop": 0.95, "step": 0.01},
///     "n_th":   [0, 0.05] | {...},
///     "tau":    {"start": 0, "stop": 2, "step": 0.01} | [...],
///     "p_min": 1e-6,                      // optional
///     "parametric_tau_cap": 5,            // optional
///     "output": "rows.csv",
///     "format": "csv" | "json"            // optional, default csv
///   }
struct SweepConfig {
    InteractionKind kind = InteractionKind::BeamSplitter;
    bool swap = false;
    std::vector<double> lambda_grid;
    std::vector<double> nth_grid;
    std::vector<double> tau_grid;
    double p_min = kDefaultReportFloor;
    double parametric_tau_cap = kDefaultParametricTauCap;
    std::filesystem::path output_path;
    OutputFormat format = OutputFormat::Csv;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Inclusive arithmetic range start, start + step, ... <= stop (index-based,
/// so no drift accumulates).
std::vector<double> arithmetic_range(double start, double stop, double step);

SweepConfig parse_sweep_config(std::string_view json_text);
/// Throws IoError if the file cannot be read.
SweepConfig load_sweep_config(const std::filesystem::path &path);

/// Stable JSON rendering with expanded grids; what the manifest hashes.
std::string canonical_json(const SweepConfig &config);

}  // namespace cvpurify::sweep

#endif  // CVPURIFY_SWEEP_CONFIG_HPP
