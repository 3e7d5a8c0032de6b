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

#include "cvpurify/sweep/sweep.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cvpurify/errors.hpp"
#include "cvpurify/golden_section.hpp"
#include "cvpurify/version.hpp"
#include "json.hpp"

namespace cvpurify::sweep {

using nlohmann::json;

SweepRow evaluate_point(InteractionKind kind, bool swap, const ProtocolParams &params, double p_min,
                        const EvolutionOptions &options) {
    GaussianChi4 state = evolve_closed_form(params, kind, options);
    if (swap) {
        state = swap_exchange(state);
    }
    const FidelityReport report = fidelity_report(state, params, p_min);
    SweepRow row;
    row.kind = kind;
    row.swap = swap;
    row.lambda = params.lambda;
    row.n_th = params.n_th;
    row.tau = params.tau;
    row.probabilities = report.probabilities;
    row.f00 = report.f00;
    row.f01 = report.f01;
    row.f10 = report.f10;
    row.f11 = report.f11;
    row.f_init = report.f_init;
    row.efficiency = report.efficiency;
    return row;
}

void validate_row(const SweepRow &row) {
    auto fail = [&](const std::string &what) {
        std::ostringstream msg;
        msg << what << " at lambda=" << format_number(row.lambda) << " n_th=" << format_number(row.n_th)
            << " tau=" << format_number(row.tau);
        throw InvariantError(msg.str());
    };
    const auto &p = row.probabilities;
    for (double x : {p.p00, p.p01, p.p10, p.p11}) {
        if (!std::isfinite(x) || x < 0.0) {
            fail("probability outside [0, 1]");
        }
    }
    if (std::abs(p.sum() - 1.0) > 1e-12) {
        fail("probabilities do not sum to one");
    }
    if (p.p01 != p.p10) {
        fail("p01 differs from p10");
    }
    for (const auto &f : {row.f00, row.f01, row.f10, row.f11}) {
        if (f && (!std::isfinite(*f) || *f <= 0.0 || *f > 1.0 + 1e-12)) {
            fail("fidelity outside (0, 1]");
        }
    }
    if (row.f01.has_value() != row.f10.has_value() || (row.f01 && *row.f01 != *row.f10)) {
        fail("f01 differs from f10");
    }
    if (!std::isfinite(row.efficiency) || row.efficiency < 0.0) {
        fail("negative efficiency");
    }
}

std::vector<SweepRow> run_sweep(const SweepConfig &config) {
    config.validate();
    const EvolutionOptions options{config.parametric_tau_cap};
    std::vector<SweepRow> rows;
    rows.reserve(config.lambda_grid.size() * config.nth_grid.size() * config.tau_grid.size());
    for (double lambda : config.lambda_grid) {
        for (double n_th : config.nth_grid) {
            for (double tau : config.tau_grid) {
                rows.push_back(evaluate_point(config.kind, config.swap, {lambda, n_th, tau}, config.p_min, options));
                validate_row(rows.back());
            }
        }
    }
    return rows;
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

constexpr const char *kColumns[] = {"kind", "swap", "lambda", "n_th", "tau", "p00", "p01", "p10",
                                    "p11", "f00",  "f01",    "f10",  "f11", "f_init", "efficiency"};

std::string optional_cell(const std::optional<double> &v) {
    return v ? format_number(*v) : std::string();
}

// Numbers go through format_number and are spliced in raw, so CSV and JSON
// carry identical digits.
json raw_number(double v) {
    return json::parse(format_number(v));
}

}  // namespace

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i) {
        out << (i ? "," : "") << kColumns[i];
    }
    out << '\n';
    for (const auto &r : rows) {
        const auto &p = r.probabilities;
        out << to_string(r.kind) << ',' << (r.swap ? "true" : "false") << ',' << format_number(r.lambda) << ','
            << format_number(r.n_th) << ',' << format_number(r.tau) << ',' << format_number(p.p00) << ','
            << format_number(p.p01) << ',' << format_number(p.p10) << ',' << format_number(p.p11) << ','
            << optional_cell(r.f00) << ',' << optional_cell(r.f01) << ',' << optional_cell(r.f10) << ','
            << optional_cell(r.f11) << ',' << format_number(r.f_init) << ',' << format_number(r.efficiency) << '\n';
    }
}

void write_json(std::ostream &out, const std::vector<SweepRow> &rows) {
    auto opt = [](const std::optional<double> &v) { return v ? raw_number(*v) : json(nullptr); };
    json arr = json::array();
    for (const auto &r : rows) {
        json o = json::object();
        o["kind"] = std::string(to_string(r.kind));
        o["swap"] = r.swap;
        o["lambda"] = raw_number(r.lambda);
        o["n_th"] = raw_number(r.n_th);
        o["tau"] = raw_number(r.tau);
        o["p00"] = raw_number(r.probabilities.p00);
        o["p01"] = raw_number(r.probabilities.p01);
        o["p10"] = raw_number(r.probabilities.p10);
        o["p11"] = raw_number(r.probabilities.p11);
        o["f00"] = opt(r.f00);
        o["f01"] = opt(r.f01);
        o["f10"] = opt(r.f10);
        o["f11"] = opt(r.f11);
        o["f_init"] = raw_number(r.f_init);
        o["efficiency"] = raw_number(r.efficiency);
        arr.push_back(std::move(o));
    }
    out << arr.dump(1) << '\n';
}

std::string sha256_hex(const std::string &text) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw InvariantError("SHA-256 computation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 0xf]);
    }
    return out;
}

namespace {

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string manifest_json(const std::string &run_kind, const std::string &canonical_parameters,
                          const std::vector<std::filesystem::path> &files) {
    json m;
    m["run"] = run_kind;
    m["tool"] = "cvpurify";
    m["tool_version"] = kVersion;
    m["parameters"] = json::parse(canonical_parameters);
    m["parameters_sha256"] = sha256_hex(canonical_parameters);
    m["created_utc"] = utc_now();
    json names = json::array();
    for (const auto &f : files) {
        names.push_back(f.filename().generic_string());
    }
    m["files"] = names;
    return m.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_sweep_output(const SweepConfig &config,
                                                      const std::vector<SweepRow> &rows) {
    const auto &path = config.output_path;
    const std::string started = utc_now();
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw IoError("cannot open output file " + path.string());
        }
        if (config.format == OutputFormat::Csv) {
            write_csv(out, rows);
        } else {
            write_json(out, rows);
        }
        if (!out.flush()) {
            throw IoError("write failed for " + path.string());
        }
    }
    auto manifest_path = path;
    manifest_path += ".manifest.json";
    json m = json::parse(manifest_json("sweep", canonical_json(config), {path}));
    m["started_utc"] = started;
    m["rows"] = rows.size();
    std::ofstream mout(manifest_path, std::ios::binary);
    if (!mout || !(mout << m.dump(2) << '\n') || !mout.flush()) {
        throw IoError("cannot write manifest " + manifest_path.string());
    }
    return {path, manifest_path};
}

OptimalTime find_optimal_time(InteractionKind kind, bool swap, double lambda, double n_th, TimeWindow window,
                              double p_min, double coarse_step, const EvolutionOptions &options) {
    ProtocolParams{lambda, n_th, 0.0}.validate();
    if (!(p_min > 0.0)) {
        throw DomainError("p_min must be positive");
    }
    if (!(coarse_step > 0.0) || !std::isfinite(coarse_step)) {
        throw DomainError("coarse step must be positive");
    }
    if (!(window.lo >= 0.0) || !(window.hi > window.lo) || !std::isfinite(window.hi)) {
        throw DomainError("time window must satisfy 0 <= lo < hi");
    }
    if (kind == InteractionKind::Parametric) {
        if (window.lo >= options.parametric_tau_cap) {
            throw DomainError("time window lies beyond the parametric time cap");
        }
        window.hi = std::min(window.hi, options.parametric_tau_cap);
    }

    auto f11_at = [&](double tau) -> std::optional<double> {
        GaussianChi4 state = evolve_closed_form({lambda, n_th, tau}, kind, options);
        if (swap) {
            state = swap_exchange(state);
        }
        if (outcome_probabilities(state).p11 < p_min) {
            return std::nullopt;
        }
        return teleportation_fidelity(conditional_chi(state, {1, 1}, p_min));
    };

    std::optional<GoldenSectionResult> best;
    const auto n = static_cast<std::size_t>(std::floor((window.hi - window.lo) / coarse_step + 1e-9));
    for (std::size_t i = 0; i <= n + 1; ++i) {
        const double tau = i <= n ? window.lo + static_cast<double>(i) * coarse_step : window.hi;
        if (const auto v = f11_at(tau); v && (!best || *v > best->value)) {
            best = GoldenSectionResult{tau, *v};
        }
    }
    if (!best) {
        throw NoAdmissiblePointError("p11 stays below " + format_number(p_min) + " over the whole window");
    }
    const double lo = std::max(window.lo, best->x - coarse_step);
    const double hi = std::min(window.hi, best->x + coarse_step);
    const auto refined = golden_section_maximize(f11_at, lo, hi, best->x, best->value);

    GaussianChi4 state = evolve_closed_form({lambda, n_th, refined.x}, kind, options);
    if (swap) {
        state = swap_exchange(state);
    }
    return {refined.x, refined.value, outcome_probabilities(state).p11};
}

}  // namespace cvpurify::sweep
