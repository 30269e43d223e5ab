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
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qpsurf {

namespace {

using nlohmann::json;

const char *const kColumns[] = {
    "model", "d", "p", "r", "n_samples", "p_l_mean", "std_error", "r_tot_log10", "seed", "wall_time_s", "version",
};

std::string number_text(double x) {
    return json(x).dump();
}

std::vector<std::string> split_csv(std::string_view row) {
    std::vector<std::string> out(1);
    for (char c : row) {
        if (c == ',') {
            out.emplace_back();
        } else if (c != '\r' && c != '\n') {
            out.back().push_back(c);
        }
    }
    return out;
}

template <typename T>
std::vector<T> as_list(const json &value) {
    std::vector<T> out;
    if (value.is_array()) {
        for (const auto &v : value) {
            out.push_back(v.get<T>());
        }
    } else {
        out.push_back(value.get<T>());
    }
    if (out.empty()) {
        throw std::invalid_argument("sweep lists must not be empty");
    }
    return out;
}

}  // namespace

ResultRecord make_record(const RunConfig &config, const Estimate &estimate) {
    ResultRecord record;
    record.model = std::string(model_name(config.model));
    record.d = config.d;
    record.p = config.noise.p;
    record.r = config.noise.r;
    record.n_samples = estimate.n_samples;
    record.p_l_mean = estimate.p_l_mean;
    record.std_error = estimate.std_error;
    record.r_tot_log10 = estimate.r_tot_log10;
    record.seed = config.seed;
    record.wall_time_s = estimate.wall_time_s;
    return record;
}

std::string to_json_line(const ResultRecord &record) {
    // ordered_json keeps the ResultRecord field order in the output.
    nlohmann::ordered_json j;
    j["model"] = record.model;
    j["d"] = record.d;
    j["p"] = record.p;
    j["r"] = record.r;
    j["n_samples"] = record.n_samples;
    j["p_l_mean"] = record.p_l_mean;
    j["std_error"] = record.std_error;
    j["r_tot_log10"] = record.r_tot_log10;
    j["seed"] = record.seed;
    j["wall_time_s"] = record.wall_time_s;
    j["version"] = record.version;
    return j.dump();
}

ResultRecord from_json_line(std::string_view line) {
    json j = json::parse(line);
    ResultRecord record;
    record.model = j.at("model").get<std::string>();
    record.d = j.at("d").get<int>();
    record.p = j.at("p").get<double>();
    record.r = j.at("r").get<double>();
    record.n_samples = j.at("n_samples").get<int64_t>();
    record.p_l_mean = j.at("p_l_mean").get<double>();
    record.std_error = j.at("std_error").get<double>();
    record.r_tot_log10 = j.at("r_tot_log10").get<double>();
    record.seed = j.at("seed").get<uint64_t>();
    record.wall_time_s = j.at("wall_time_s").get<double>();
    record.version = j.at("version").get<std::string>();
    return record;
}

std::string csv_header() {
    std::string out;
    for (const char *name : kColumns) {
        if (!out.empty()) {
            out += ',';
        }
        out += name;
    }
    return out;
}

std::string to_csv_row(const ResultRecord &record) {
    std::ostringstream out;
    out << record.model << ',' << record.d << ',' << number_text(record.p) << ',' << number_text(record.r) << ','
        << record.n_samples << ',' << number_text(record.p_l_mean) << ',' << number_text(record.std_error) << ','
        << number_text(record.r_tot_log10) << ',' << record.seed << ',' << number_text(record.wall_time_s) << ','
        << record.version;
    return out.str();
}

ResultRecord from_csv_row(std::string_view row) {
    auto fields = split_csv(row);
    if (fields.size() != std::size(kColumns)) {
        throw std::invalid_argument("CSV row has " + std::to_string(fields.size()) + " fields");
    }
    auto num = [](const std::string &s) {
        return json::parse(s).get<double>();
    };
    ResultRecord record;
    record.model = fields[0];
    record.d = std::stoi(fields[1]);
    record.p = num(fields[2]);
    record.r = num(fields[3]);
    record.n_samples = std::stoll(fields[4]);
    record.p_l_mean = num(fields[5]);
    record.std_error = num(fields[6]);
    record.r_tot_log10 = num(fields[7]);
    record.seed = std::stoull(fields[8]);
    record.wall_time_s = num(fields[9]);
    record.version = fields[10];
    return record;
}

std::vector<RunConfig> expand_sweep(std::string_view json_text, const RunConfig &base) {
    json sweep = json::parse(json_text);
    if (!sweep.is_object()) {
        throw std::invalid_argument("sweep file must hold a JSON object");
    }
    for (const auto &[key, value] : sweep.items()) {
        if (key != "model" && key != "d" && key != "p" && key != "r" && key != "samples" && key != "seed") {
            throw std::invalid_argument("unknown sweep key '" + key + "'");
        }
    }
    std::vector<std::string> models = sweep.contains("model") ? as_list<std::string>(sweep["model"])
                                                             : std::vector<std::string>{std::string(model_name(base.model))};
    std::vector<int> ds = sweep.contains("d") ? as_list<int>(sweep["d"]) : std::vector<int>{base.d};
    std::vector<double> ps = sweep.contains("p") ? as_list<double>(sweep["p"]) : std::vector<double>{base.noise.p};
    std::vector<double> rs = sweep.contains("r") ? as_list<double>(sweep["r"]) : std::vector<double>{base.noise.r};

    RunConfig shared = base;
    if (sweep.contains("samples")) {
        shared.samples = sweep["samples"].get<int64_t>();
    }
    if (sweep.contains("seed")) {
        shared.seed = sweep["seed"].get<uint64_t>();
    }
    std::vector<RunConfig> out;
    for (const auto &m : models) {
        for (int d : ds) {
            for (double r : rs) {
                for (double p : ps) {
                    RunConfig config = shared;
                    config.model = parse_model(m);
                    config.d = d;
                    config.noise = NoiseParams::make(p, r);
                    build_layout(d);
                    out.push_back(config);
                }
            }
        }
    }
    return out;
}

std::vector<ScalingRow> scaling_table(NoiseModel model, const NoiseParams &params, int d_min, int d_max) {
    std::vector<ScalingRow> rows;
    double ln_r = std::log(robustness(params));
    for (int d = d_min; d <= d_max; d++) {
        if (d % 2 == 0) {
            continue;
        }
        int64_t locations = noise_locations(model, d);
        rows.push_back({d, locations, 2 * static_cast<double>(locations) * ln_r / std::log(10.0)});
    }
    return rows;
}

}  // namespace qpsurf
