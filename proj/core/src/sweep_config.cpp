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

#include "cvpurify/sweep/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "cvpurify/errors.hpp"
#include "json.hpp"

namespace cvpurify::sweep {

using nlohmann::json;

std::vector<double> arithmetic_range(double start, double stop, double step) {
    if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start) || !std::isfinite(stop)) {
        throw ConfigError("", "range needs finite start/stop and a positive step");
    }
    if (stop < start) {
        throw ConfigError("", "range stop lies below start");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(start + static_cast<double>(i) * step);
    }
    return out;
}

namespace {

void reject_unknown_keys(const json &object, const std::set<std::string> &allowed, const std::string &where) {
    for (const auto &[key, value] : object.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
        }
    }
}

double number_field(const json &object, const std::string &key, const std::string &where) {
    const auto &v = object.at(key);
    if (!v.is_number()) {
        throw ConfigError(where, "expected a number");
    }
    return v.get<double>();
}

std::vector<double> grid_field(const json &root, const std::string &key) {
    if (!root.contains(key)) {
        throw ConfigError(key, "missing required field");
    }
    const auto &v = root.at(key);
    if (v.is_array()) {
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number()) {
                throw ConfigError(key + "[" + std::to_string(i) + "]", "expected a number");
            }
            out.push_back(v[i].get<double>());
        }
        return out;
    }
    if (v.is_object()) {
        reject_unknown_keys(v, {"start", "stop", "step"}, key);
        for (const char *part : {"start", "stop", "step"}) {
            if (!v.contains(part)) {
                throw ConfigError(key + "." + part, "missing required field");
            }
        }
        try {
            return arithmetic_range(number_field(v, "start", key + ".start"), number_field(v, "stop", key + ".stop"),
                                    number_field(v, "step", key + ".step"));
        } catch (const ConfigError &e) {
            if (!e.where.empty()) {
                throw;
            }
            throw ConfigError(key, e.what());
        }
    }
    throw ConfigError(key, "expected an array of numbers or a {start, stop, step} range");
}

}  // namespace

void SweepConfig::validate() const {
    auto check_grid = [](const std::vector<double> &grid, const std::string &name, auto &&ok, const char *rule) {
        if (grid.empty()) {
            throw ConfigError(name, "grid is empty");
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!ok(grid[i])) {
                throw ConfigError(name + "[" + std::to_string(i) + "]",
                                  std::string("value ") + std::to_string(grid[i]) + " violates " + rule);
            }
        }
    };
    check_grid(lambda_grid, "lambda", [](double x) { return x >= 0.0 && x < 1.0; }, "0 <= lambda < 1");
    check_grid(nth_grid, "n_th", [](double x) { return x >= 0.0 && std::isfinite(x); }, "n_th >= 0");
    check_grid(tau_grid, "tau", [](double x) { return x >= 0.0 && std::isfinite(x); }, "tau >= 0");
    if (!(p_min > 0.0 && p_min <= 1.0)) {
        throw ConfigError("p_min", "must lie in (0, 1]");
    }
    if (!(parametric_tau_cap > 0.0) || !std::isfinite(parametric_tau_cap)) {
        throw ConfigError("parametric_tau_cap", "must be positive");
    }
    if (kind == InteractionKind::Parametric) {
        for (std::size_t i = 0; i < tau_grid.size(); ++i) {
            if (tau_grid[i] > parametric_tau_cap) {
                throw ConfigError("tau[" + std::to_string(i) + "]", "exceeds parametric_tau_cap");
            }
        }
    }
    if (output_path.empty()) {
        throw ConfigError("output", "must be a non-empty path");
    }
}

SweepConfig parse_sweep_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("", "top level must be a JSON object");
    }
    reject_unknown_keys(root,
                        {"schema_version", "kind", "swap", "lambda", "n_th", "tau", "p_min", "parametric_tau_cap",
                         "output", "format"},
                        "");
    if (!root.contains("schema_version") || !root["schema_version"].is_number_integer()) {
        throw ConfigError("schema_version", "missing or not an integer");
    }
    if (root["schema_version"].get<int>() != kConfigSchemaVersion) {
        throw ConfigError("schema_version", "unsupported version " + root["schema_version"].dump());
    }

    SweepConfig config;
    if (!root.contains("kind") || !root["kind"].is_string()) {
        throw ConfigError("kind", "missing or not a string");
    }
    try {
        config.kind = parse_interaction_kind(root["kind"].get<std::string>());
    } catch (const DomainError &e) {
        throw ConfigError("kind", e.what());
    }
    if (root.contains("swap")) {
        if (!root["swap"].is_boolean()) {
            throw ConfigError("swap", "expected true or false");
        }
        config.swap = root["swap"].get<bool>();
    }
    config.lambda_grid = grid_field(root, "lambda");
    config.nth_grid = grid_field(root, "n_th");
    config.tau_grid = grid_field(root, "tau");
    if (root.contains("p_min")) {
        config.p_min = number_field(root, "p_min", "p_min");
    }
    if (root.contains("parametric_tau_cap")) {
        config.parametric_tau_cap = number_field(root, "parametric_tau_cap", "parametric_tau_cap");
    }
    if (!root.contains("output") || !root["output"].is_string()) {
        throw ConfigError("output", "missing or not a string");
    }
    config.output_path = root["output"].get<std::string>();
    if (root.contains("format")) {
        const auto &f = root["format"];
        if (f == "csv") {
            config.format = OutputFormat::Csv;
        } else if (f == "json") {
            config.format = OutputFormat::Json;
        } else {
            throw ConfigError("format", "expected \"csv\" or \"json\"");
        }
    }
    config.validate();
    return config;
}

SweepConfig load_sweep_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_sweep_config(buffer.str());
}

std::string canonical_json(const SweepConfig &config) {
    json j;
    j["schema_version"] = kConfigSchemaVersion;
    j["kind"] = std::string(to_string(config.kind));
    j["swap"] = config.swap;
    j["lambda"] = config.lambda_grid;
    j["n_th"] = config.nth_grid;
    j["tau"] = config.tau_grid;
    j["p_min"] = config.p_min;
    j["parametric_tau_cap"] = config.parametric_tau_cap;
    j["output"] = config.output_path.generic_string();
    j["format"] = config.format == OutputFormat::Csv ? "csv" : "json";
    return j.dump();
}

}  // namespace cvpurify::sweep
