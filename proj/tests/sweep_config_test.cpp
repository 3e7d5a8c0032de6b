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

#include <gtest/gtest.h>

#include "cvpurify/errors.hpp"

using namespace cvpurify;
using namespace cvpurify::sweep;

namespace {

const char *kMinimal = R"({
  "schema_version": 1,
  "kind": "parametric",
  "lambda": [0.5],
  "n_th": [0],
  "tau": {"start": 0, "stop": 2, "step": 0.01},
  "output": "fig2.csv"
})";

std::string where_of(const std::string &text) {
    try {
        parse_sweep_config(text);
    } catch (const ConfigError &e) {
        return e.where;
    }
    return "<no error>";
}

std::string with(const std::string &field_json) {
    std::string s = kMinimal;
    s.insert(s.rfind('}'), ", " + field_json);
    return s;
}

}  // namespace

TEST(ArithmeticRange, inclusive_and_drift_free) {
    const auto r = arithmetic_range(0.0, 2.0, 0.01);
    ASSERT_EQ(r.size(), 201u);
    EXPECT_EQ(r.front(), 0.0);
    EXPECT_EQ(r[150], 1.5);
    EXPECT_DOUBLE_EQ(r.back(), 2.0);
    ASSERT_EQ(arithmetic_range(0.0, 0.95, 0.01).size(), 96u);
    ASSERT_EQ(arithmetic_range(1.0, 1.0, 0.5).size(), 1u);
    ASSERT_THROW(arithmetic_range(0.0, 1.0, 0.0), ConfigError);
    ASSERT_THROW(arithmetic_range(1.0, 0.0, 0.1), ConfigError);
}

TEST(ParseSweepConfig, minimal_document) {
    const SweepConfig c = parse_sweep_config(kMinimal);
    EXPECT_EQ(c.kind, InteractionKind::Parametric);
    EXPECT_FALSE(c.swap);
    EXPECT_EQ(c.lambda_grid, std::vector<double>{0.5});
    EXPECT_EQ(c.nth_grid, std::vector<double>{0.0});
    EXPECT_EQ(c.tau_grid.size(), 201u);
    EXPECT_EQ(c.p_min, 1e-6);
    EXPECT_EQ(c.parametric_tau_cap, 5.0);
    EXPECT_EQ(c.output_path, "fig2.csv");
    EXPECT_EQ(c.format, OutputFormat::Csv);
}

TEST(ParseSweepConfig, optional_fields) {
    const SweepConfig c = parse_sweep_config(
        with(R"("swap": true, "p_min": 1e-4, "format": "json", "parametric_tau_cap": 3)"));
    EXPECT_TRUE(c.swap);
    EXPECT_EQ(c.p_min, 1e-4);
    EXPECT_EQ(c.format, OutputFormat::Json);
    EXPECT_EQ(c.parametric_tau_cap, 3.0);
}

TEST(ParseSweepConfig, errors_name_the_field) {
    EXPECT_EQ(where_of(with(R"("colour": 1)")), "colour");
    EXPECT_EQ(where_of(R"({"schema_version": 2})"), "schema_version");
    EXPECT_EQ(where_of(R"({"kind": "parametric"})"), "schema_version");
    EXPECT_EQ(where_of(with(R"("format": "xml")")), "format");
    EXPECT_EQ(where_of(with(R"("swap": "yes")")), "swap");
    EXPECT_EQ(where_of(with(R"("p_min": 0)")), "p_min");

    std::string bad_lambda = kMinimal;
    bad_lambda.replace(bad_lambda.find("[0.5]"), 5, "[0.5, 1.0]");
    EXPECT_EQ(where_of(bad_lambda), "lambda[1]");

    std::string bad_range = kMinimal;
    bad_range.replace(bad_range.find("\"step\": 0.01"), 12, "\"stride\": 0.01");
    EXPECT_EQ(where_of(bad_range), "tau.stride");

    std::string negative_step = kMinimal;
    negative_step.replace(negative_step.find("\"step\": 0.01"), 12, "\"step\": -0.01");
    EXPECT_EQ(where_of(negative_step), "tau");

    std::string long_tau = kMinimal;
    long_tau.replace(long_tau.find("\"stop\": 2"), 9, "\"stop\": 6");
    EXPECT_EQ(where_of(long_tau).rfind("tau[", 0), 0u);

    std::string empty_nth = kMinimal;
    empty_nth.replace(empty_nth.find("\"n_th\": [0]"), 11, "\"n_th\": []");
    EXPECT_EQ(where_of(empty_nth), "n_th");

    EXPECT_EQ(where_of("{not json"), "");
    EXPECT_EQ(where_of("[1, 2]"), "");
}

TEST(ParseSweepConfig, beam_splitter_times_are_unbounded) {
    std::string s = kMinimal;
    s.replace(s.find("parametric"), 10, "beam-splitter");
    s.replace(s.find("\"stop\": 2"), 9, "\"stop\": 6.3");
    ASSERT_NO_THROW(parse_sweep_config(s));
}

TEST(LoadSweepConfig, missing_file_is_an_io_error) {
    ASSERT_THROW(load_sweep_config("/nonexistent/dir/config.json"), IoError);
}

TEST(CanonicalJson, is_stable_and_expands_ranges) {
    const SweepConfig c = parse_sweep_config(kMinimal);
    const std::string a = canonical_json(c);
    EXPECT_EQ(a, canonical_json(parse_sweep_config(kMinimal)));
    EXPECT_NE(a.find("\"tau\":[0.0,0.01,"), std::string::npos);
    EXPECT_NE(a.find("\"schema_version\":1"), std::string::npos);
}
