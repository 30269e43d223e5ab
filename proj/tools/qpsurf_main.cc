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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpsurf/engine.h"
#include "qpsurf/quasiprob.h"
#include "qpsurf/record.h"

using namespace qpsurf;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

int default_workers() {
    if (const char *env = std::getenv("QPSURF_WORKERS")) {
        try {
            int w = std::stoi(env);
            if (w > 0) {
                return w;
            }
        } catch (const std::exception &) {
        }
        std::cerr << "ignoring invalid QPSURF_WORKERS='" << env << "'\n";
    }
    return 1;
}

void print_decomposition(const NoiseParams &params) {
    QuasiDecomposition q = decompose(params);
    std::printf("p = %.12g\nr = %.12g\nR = %.12g\n", params.p, params.r, q.robustness);
    for (ChannelTag tag : kAllChannels) {
        std::printf("c[%s] = %.12g\n", std::string(channel_name(tag)).c_str(), q.coeff(tag));
    }
}

void print_cost(NoiseModel model, int d, const NoiseParams &params, double epsilon, double delta) {
    CostEstimate c = cost(model, d, params, epsilon, delta);
    std::printf("model = %s\nd = %d\nlocations = %lld\nR = %.12g\n", std::string(model_name(model)).c_str(), d,
                static_cast<long long>(c.locations), c.robustness);
    std::printf("log10_r_tot_squared = %.12g\nr_tot = %.12g\n", c.log10_r_tot_squared, c.r_tot());
    if (c.feasible) {
        std::printf("samples = %lld\n", static_cast<long long>(c.samples));
    } else {
        std::printf("samples = infeasible\n");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quasi-probability Monte Carlo for planar surface codes under coherent noise"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    double p = 0;
    double r = 0;
    std::string model_text = "code";
    int d = 3;
    double epsilon = 0.01;
    double delta = 0.05;

    auto *robust_cmd = app.add_subcommand("robustness", "Print the channel robustness and decomposition coefficients");
    robust_cmd->add_option("--p", p, "Bit-flip probability")->required();
    robust_cmd->add_option("--r", r, "Noise coherence")->required();

    auto *cost_cmd = app.add_subcommand("cost", "Print the sampling cost for one configuration");
    cost_cmd->add_option("--model", model_text, "code | pheno")->required();
    cost_cmd->add_option("--d", d, "Code distance")->required();
    cost_cmd->add_option("--p", p, "Bit-flip probability")->required();
    cost_cmd->add_option("--r", r, "Noise coherence")->required();
    cost_cmd->add_option("--epsilon", epsilon, "Additive accuracy");
    cost_cmd->add_option("--delta", delta, "Failure probability");

    int d_min = 3;
    int d_max = 13;
    auto *scaling_cmd = app.add_subcommand("scaling", "Print log10 R_tot^2 against the code distance");
    scaling_cmd->add_option("--model", model_text, "code | pheno");
    scaling_cmd->add_option("--p", p, "Bit-flip probability")->required();
    scaling_cmd->add_option("--r", r, "Noise coherence")->required();
    scaling_cmd->add_option("--d-min", d_min, "Smallest distance");
    scaling_cmd->add_option("--d-max", d_max, "Largest distance");

    int64_t samples = 0;
    uint64_t seed = 0;
    int workers = default_workers();
    std::string out_path;
    std::string format = "jsonl";
    std::string sweep_path;
    auto *run_cmd = app.add_subcommand("run", "Estimate the logical error rate");
    run_cmd->add_option("--model", model_text, "code | pheno");
    run_cmd->add_option("--d", d, "Code distance");
    run_cmd->add_option("--p", p, "Bit-flip probability");
    run_cmd->add_option("--r", r, "Noise coherence");
    auto *samples_opt = run_cmd->add_option("--samples", samples, "Number of samples");
    auto *eps_opt = run_cmd->add_option("--epsilon", epsilon, "Additive accuracy for sample planning");
    run_cmd->add_option("--delta", delta, "Failure probability for sample planning");
    samples_opt->excludes(eps_opt);
    run_cmd->add_option("--seed", seed, "Master seed");
    run_cmd->add_option("--workers", workers, "Worker threads (default: $QPSURF_WORKERS or 1)");
    run_cmd->add_option("--out", out_path, "Output file (default: stdout)");
    run_cmd->add_option("--format", format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));
    run_cmd->add_option("--sweep", sweep_path, "JSON file of parameter lists to sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (robust_cmd->parsed()) {
            print_decomposition(NoiseParams::make(p, r));
            return 0;
        }
        if (cost_cmd->parsed()) {
            NoiseModel model = parse_model(model_text);
            build_layout(d);
            print_cost(model, d, NoiseParams::make(p, r), epsilon, delta);
            return 0;
        }
        if (scaling_cmd->parsed()) {
            NoiseModel model = parse_model(scaling_cmd->count("--model") ? model_text : "pheno");
            NoiseParams params = NoiseParams::make(p, r);
            std::printf("d,locations,log10_r_tot_squared\n");
            for (const auto &row : scaling_table(model, params, d_min, d_max)) {
                std::printf("%d,%lld,%.12g\n", row.d, static_cast<long long>(row.locations), row.log10_r_tot_squared);
            }
            return 0;
        }

        RunConfig base;
        base.model = parse_model(model_text);
        base.d = d;
        base.noise = NoiseParams::make(p, r);
        if (samples_opt->count()) {
            base.samples = samples;
        }
        base.epsilon = epsilon;
        base.delta = delta;
        base.seed = seed;
        base.workers = workers;

        std::vector<RunConfig> configs;
        if (!sweep_path.empty()) {
            std::ifstream in(sweep_path);
            if (!in) {
                throw std::invalid_argument("cannot read sweep file " + sweep_path);
            }
            std::stringstream text;
            text << in.rdbuf();
            configs = expand_sweep(text.str(), base);
        } else {
            build_layout(base.d);
            configs.push_back(base);
        }
        // Budgets are checked up front so an infeasible point never starts work.
        for (const auto &config : configs) {
            resolve_samples(config);
        }

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::trunc);
            if (!file) {
                throw std::invalid_argument("cannot open " + out_path);
            }
        }
        std::ostream &out = out_path.empty() ? std::cout : file;
        if (format == "csv") {
            out << csv_header() << '\n' << std::flush;
        }
        for (const auto &config : configs) {
            ResultRecord record = make_record(config, estimate(config));
            out << (format == "csv" ? to_csv_row(record) : to_json_line(record)) << '\n' << std::flush;
        }
        return 0;
    } catch (const InfeasibleBudget &e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
