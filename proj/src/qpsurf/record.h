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

#ifndef QPSURF_RECORD_H
#define QPSURF_RECORD_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpsurf/engine.h"

namespace qpsurf {

inline constexpr std::string_view kVersion = "0.1.0";

/// One output row of `qpsurf run`.
struct ResultRecord {
    std::string model;
    int d = 0;
    double p = 0;
    double r = 0;
    int64_t n_samples = 0;
    double p_l_mean = 0;
    double std_error = 0;
    double r_tot_log10 = 0;
    uint64_t seed = 0;
    double wall_time_s = 0;
    std::string version{kVersion};

    bool operator==(const ResultRecord &other) const = default;
};

ResultRecord make_record(const RunConfig &config, const Estimate &estimate);

/// One JSON object, no trailing newline. Doubles use the shortest decimal form
/// that parses back to the same value.
std::string to_json_line(const ResultRecord &record);
ResultRecord from_json_line(std::string_view line);

/// Column names in ResultRecord field order.
std::string csv_header();
std::string to_csv_row(const ResultRecord &record);
ResultRecord from_csv_row(std::string_view row);

/// Sweep file: a JSON object mapping "model", "d", "p", "r" (and optionally
/// "samples", "seed") to a scalar or a list. Missing keys fall back to `base`.
/// Configurations are expanded as nested loops model > d > r > p, p innermost.
std::vector<RunConfig> expand_sweep(std::string_view json_text, const RunConfig &base);

struct ScalingRow {
    int d;
    int64_t locations;
    double log10_r_tot_squared;
};

/// R_tot^2 against d for odd d in [d_min, d_max].
std::vector<ScalingRow> scaling_table(NoiseModel model, const NoiseParams &params, int d_min, int d_max);

}  // namespace qpsurf

#endif
