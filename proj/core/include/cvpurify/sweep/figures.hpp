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

#ifndef CVPURIFY_SWEEP_FIGURES_HPP
#define CVPURIFY_SWEEP_FIGURES_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cvpurify::sweep {

enum class FigureId { Fig2, Fig3, Fig4a, Fig4b, Fig5, Fig6 };

std::string_view to_string(FigureId id);
/// Accepts "fig2" ... "fig6". Throws ConfigError otherwise.
FigureId parse_figure_id(std::string_view text);

/// Column-named numeric table; empty cells mark undefined values.
struct FigureTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
    /// JSON description of every grid and setting used.
    std::string parameters_json;

    std::size_t column(std::string_view name) const;
};

/// Dataset behind one figure:
///
///   fig2   parametric, lambda 0.5, n_th 0, tau 0..2: tau,f00,f01,f11,f_init
///   fig3   beam splitter at the per-point optimal time for n_th in
///          {0, 0.01, 0.05, 0.1}, lambda 0..0.95:
///          n_th,lambda,tau_star,p11,f00,f01,f11,f_init
///   fig4a  beam-splitter efficiency map over (tau, lambda) at n_th 0:
///          tau,lambda,p11,f11,f_init,efficiency
///   fig4b  same at n_th 0.05
///   fig5   parametric with swap, lambda in {0.1, 0.3, 0.5}, n_th in {0, 0.05},
///          tau 0..1: lambda,n_th,tau,f00,f01,f11,f_init,f_param
///   fig6   parametric with swap, lambda in {0.05, 0.1, 0.15, 0.2}, n_th 0,
///          tau 0..1: lambda,tau,f11,f_init,f_param
FigureTable figure_table(FigureId id);

void write_table_csv(std::ostream &out, const FigureTable &table);

/// gnuplot script reading `<id>.csv` from its own directory.
std::string gnuplot_script(FigureId id);

/// Writes `<id>.csv`, `<id>.gp` and `<id>.manifest.json` under `out_dir`
/// (created if missing). Throws IoError on failure.
std::vector<std::filesystem::path> emit_figure_data(FigureId id, const std::filesystem::path &out_dir);

}  // namespace cvpurify::sweep

#endif  // CVPURIFY_SWEEP_FIGURES_HPP
