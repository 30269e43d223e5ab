// Copyright 2026 The qpsurf Authors
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

#include "qpsurf/record.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace qpsurf;

namespace {

ResultRecord sample_record() {
    ResultRecord r;
    r.model = "pheno";
    r.d = 5;
    r.p = 0.1 + 0.2;
    r.r = 1.0 / 3.0;
    r.n_samples = 1234567;
    r.p_l_mean = -0.000123456789012345678;
    r.std_error = 2.5e-4;
    r.r_tot_log10 = std::log10(72.123456789);
    r.seed = 18446744073709551615ull;
    r.wall_time_s = 12.75;
    return r;
}

}  // namespace

TEST(record, json_round_trip) {
    ResultRecord r = sample_record();
    std::string line = to_json_line(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_EQ(from_json_line(line), r);
    EXPECT_EQ(line.rfind("{\"model\":\"pheno\",\"d\":5,", 0), 0u) << line;
    EXPECT_NE(line.find("\"seed\":18446744073709551615"), std::string::npos);
    EXPECT_NE(line.find("\"version\":\"0.1.0\""), std::string::npos);
}

TEST(record, csv_round_trip) {
    ResultRecord r = sample_record();
    EXPECT_EQ(csv_header(), "model,d,p,r,n_samples,p_l_mean,std_error,r_tot_log10,seed,wall_time_s,version");
    EXPECT_EQ(from_csv_row(to_csv_row(r)), r);
    EXPECT_THROW(from_csv_row("pheno,5"), std::invalid_argument);
}

TEST(record, malformed_json) {
    EXPECT_ANY_THROW(from_json_line("{\"model\":"));
    EXPECT_ANY_THROW(from_json_line("{\"model\":\"code\"}"));
}

TEST(record, make_record) {
    RunConfig c;
    c.model = NoiseModel::Phenomenological;
    c.d = 7;
    c.noise = NoiseParams::make(0.015, 0.15);
    c.seed = 99;
    Estimate e;
    e.p_l_mean = 0.01;
    e.std_error = 0.001;
    e.n_samples = 10;
    e.r_tot_log10 = 1.8;
    e.wall_time_s = 3;
    ResultRecord r = make_record(c, e);
    EXPECT_EQ(r.model, "pheno");
    EXPECT_EQ(r.d, 7);
    EXPECT_EQ(r.p, 0.015);
    EXPECT_EQ(r.r, 0.15);
    EXPECT_EQ(r.seed, 99u);
    EXPECT_EQ(r.n_samples, 10);
    EXPECT_EQ(r.version, "0.1.0");
}

TEST(record, sweep_expands_in_order) {
    RunConfig base;
    base.seed = 4;
    base.samples = 1000;
    auto configs = expand_sweep(R"({"model": "code", "d": [3, 5], "p": [0.01, 0.02, 0.03, 0.04, 0.05], "r": [0, 0.5, 1]})", base);
    ASSERT_EQ(configs.size(), 30u);
    size_t k = 0;
    for (int d : {3, 5}) {
        for (double r : {0.0, 0.5, 1.0}) {
            for (double p : {0.01, 0.02, 0.03, 0.04, 0.05}) {
                EXPECT_EQ(configs[k].d, d);
                EXPECT_EQ(configs[k].noise.r, r);
                EXPECT_EQ(configs[k].noise.p, p);
                EXPECT_EQ(configs[k].model, NoiseModel::CodeCapacity);
                EXPECT_EQ(configs[k].seed, 4u);
                EXPECT_EQ(configs[k].samples, 1000);
                k++;
            }
        }
    }
}

TEST(record, sweep_scalars_and_errors) {
    RunConfig base;
    auto configs = expand_sweep(R"({"model": ["pheno", "code"], "d": 3, "p": 0.01, "r": 0, "samples": 5, "seed": 8})", base);
    ASSERT_EQ(configs.size(), 2u);
    EXPECT_EQ(configs[0].model, NoiseModel::Phenomenological);
    EXPECT_EQ(configs[1].model, NoiseModel::CodeCapacity);
    EXPECT_EQ(configs[1].samples, 5);
    EXPECT_EQ(configs[1].seed, 8u);
    EXPECT_ANY_THROW(expand_sweep(R"({"p": [0.6]})", base));
    EXPECT_ANY_THROW(expand_sweep(R"({"d": [4]})", base));
    EXPECT_ANY_THROW(expand_sweep(R"({"colour": 1})", base));
    EXPECT_ANY_THROW(expand_sweep(R"([1, 2])", base));
    EXPECT_ANY_THROW(expand_sweep(R"({"p": []})", base));
}

TEST(record, scaling_table) {
    NoiseParams params = NoiseParams::make(0.015, 0.15);
    auto rows = scaling_table(NoiseModel::Phenomenological, params, 3, 13);
    ASSERT_EQ(rows.size(), 6u);
    double log10_r = std::log10(robustness(params));
    for (size_t i = 0; i < rows.size(); i++) {
        int d = 3 + 2 * static_cast<int>(i);
        EXPECT_EQ(rows[i].d, d);
        EXPECT_EQ(rows[i].locations, static_cast<int64_t>(d) * (3 * d * d - 4 * d + 2));
        EXPECT_NEAR(rows[i].log10_r_tot_squared, 2 * rows[i].locations * log10_r, 1e-9);
    }
}
