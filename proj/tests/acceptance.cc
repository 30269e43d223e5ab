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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.
//
// Usage: qpsurf_acceptance --cli PATH_TO_QPSURF [--only N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "oracle/oracle.h"
#include "qpsurf/code.h"
#include "qpsurf/decoder.h"
#include "qpsurf/engine.h"
#include "qpsurf/quasiprob.h"
#include "qpsurf/record.h"

using namespace qpsurf;

namespace {

std::string g_cli;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string &what) {
        if (!condition) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

RunConfig config(NoiseModel model, int d, double p, double r, int64_t samples, uint64_t seed) {
    RunConfig c;
    c.model = model;
    c.d = d;
    c.noise = NoiseParams::make(p, r);
    c.samples = samples;
    c.seed = seed;
    return c;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void ptm_reconstruction(Outcome &out) {
    auto start = std::chrono::steady_clock::now();
    double worst = 0;
    for (int i = 0; i < 20; i++) {
        for (int j = 0; j < 5; j++) {
            NoiseParams params = NoiseParams::make(0.001 + 0.1 * j, i / 19.0);
            QuasiDecomposition q = decompose(params);
            Ptm want = oracle::ptm_from_kraus({oracle::noise_kraus(params)[0], oracle::noise_kraus(params)[1]});
            Ptm sum{};
            for (ChannelTag tag : kAllChannels) {
                Ptm m = ptm(tag);
                for (int a = 0; a < 4; a++) {
                    for (int b = 0; b < 4; b++) {
                        sum[a][b] += q.coeff(tag) * m[a][b];
                    }
                }
            }
            for (int a = 0; a < 4; a++) {
                for (int b = 0; b < 4; b++) {
                    worst = std::max(worst, std::abs(sum[a][b] - want[a][b]));
                }
            }
        }
    }
    double elapsed = seconds_since(start);
    out.detail << "max |sum c_k PTM_k - PTM(N)| = " << worst << " over 100 points, " << elapsed << " s";
    out.require(worst <= 1e-12, "elementwise error above 1e-12");
    out.require(elapsed < 1, "runtime above 1 s");
}

void robustness_boundary(Outcome &out) {
    int checked = 0;
    int mismatched = 0;
    for (int i = 0; i <= 200; i++) {
        for (int j = 0; j <= 200; j++) {
            NoiseParams params = NoiseParams::make(0.2 * j / 200.0, i / 200.0);
            double two_alpha = 2 * params.rotation_angle();
            double lhs = (1 - 2 * params.p) * (std::cos(two_alpha) + std::sin(two_alpha));
            double r = robustness(params);
            bool ok = (r == 1.0) == (lhs <= 1);
            if (std::abs(lhs - 1) > 1e-12) {
                checked++;
                mismatched += !ok;
            }
            if (r != 1.0) {
                mismatched += std::abs(r - lhs) > 1e-12;
            }
        }
    }
    NoiseParams spot = NoiseParams::make(0.05, 1);
    double r_spot = robustness(spot);
    double r_lp = oracle::breakpoint_scan(ptm(spot)).l1;
    double r_efficient = robustness(NoiseParams::make(0.01, 0.10));
    out.detail.precision(12);
    out.detail << checked << " grid points, " << mismatched << " mismatches; R(r=1,p=0.05) = " << r_spot << " (LP "
               << r_lp << "); R(r=0.10,p=0.01) = " << r_efficient;
    out.require(mismatched == 0, "boundary characterization");
    out.require(std::abs(r_spot - r_lp) <= 1e-9, "LP oracle disagreement");
    out.require(std::abs(r_spot - 1.20230) < 5e-6, "spot value 1.20230");
    out.require(r_efficient == 1.0, "R(0.10, 0.01) = 1");
}

void cost_formulas(Outcome &out) {
    auto start = std::chrono::steady_clock::now();
    for (int d = 3; d <= 13; d += 2) {
        out.require(noise_locations(NoiseModel::Phenomenological, d) == int64_t{d} * (3 * d * d - 4 * d + 2), "pheno count");
        out.require(noise_locations(NoiseModel::CodeCapacity, d) == int64_t{d} * d + (d - 1) * (d - 1), "code count");
    }
    CostEstimate a = cost(NoiseModel::Phenomenological, 7, NoiseParams::make(0.015, 0.15), 0.01, 0.05);
    CostEstimate b = cost(NoiseModel::Phenomenological, 13, NoiseParams::make(0.002, 0.05), 0.01, 0.05);
    out.require(a.log10_r_tot_squared / 2 < 3, "(0.015, 0.15, 7) R_tot < 1e3");
    out.require(b.log10_r_tot_squared / 2 < 3, "(0.002, 0.05, 13) R_tot < 1e3");
    for (const CostEstimate *c : {&a, &b}) {
        out.require(c->log10_r_tot_squared == 2.0 * static_cast<double>(c->locations) * std::log10(c->robustness),
                    "log-space exponent");
    }
    out.detail.precision(4);
    out.detail << "R_tot(0.015,0.15,7) = " << a.r_tot() << ", R_tot(0.002,0.05,13) = " << b.r_tot() << "; table log10 R_tot^2 at (p=0.015, r=0.15):";
    for (const ScalingRow &row : scaling_table(NoiseModel::Phenomenological, NoiseParams::make(0.015, 0.15), 3, 13)) {
        out.detail << " d" << row.d << "=" << row.log10_r_tot_squared;
    }
    out.require(seconds_since(start) < 1, "runtime above 1 s");
}

void exact_oracle_equivalence(Outcome &out) {
    struct Point {
        double p;
        double r;
        uint64_t seed;
    };
    out.detail.precision(6);
    for (Point pt : {Point{0.08, 1, 401}, Point{0.05, 0.5, 402}}) {
        NoiseParams params = NoiseParams::make(pt.p, pt.r);
        double exact = oracle::exact_code_capacity_pl(3, params);
        Estimate e = estimate(config(NoiseModel::CodeCapacity, 3, pt.p, pt.r, 1000000, pt.seed));
        double z = (e.p_l_mean - exact) / e.std_error;
        out.detail << "(r=" << pt.r << ",p=" << pt.p << "): MC " << e.p_l_mean << " +- " << e.std_error << " vs exact "
                   << exact << " (z=" << z << ", " << e.wall_time_s << " s); ";
        out.require(std::abs(z) < 4, "outside 4 standard errors");
    }
}

void classical_limit(Outcome &out) {
    out.detail.precision(6);
    double exact3 = oracle::classical_code_capacity_pl(3, 0.1);
    Estimate e3 = estimate(config(NoiseModel::CodeCapacity, 3, 0.1, 0, 1000000, 501));
    double z3 = (e3.p_l_mean - exact3) / e3.std_error;
    out.detail << "d3: " << e3.p_l_mean << " vs enumeration " << exact3 << " (z=" << z3 << "); ";
    out.require(std::abs(z3) < 4, "d=3 outside 4 sigma");

    const int64_t direct_samples = 1000000;
    int64_t failures = oracle::classical_code_capacity_failures(5, 0.1, direct_samples, 502);
    double direct = static_cast<double>(failures) / direct_samples;
    double direct_se = std::sqrt(direct * (1 - direct) / direct_samples);
    Estimate e5 = estimate(config(NoiseModel::CodeCapacity, 5, 0.1, 0, 300000, 503));
    double z5 = (e5.p_l_mean - direct) / std::hypot(e5.std_error, direct_se);
    out.detail << "d5: " << e5.p_l_mean << " vs direct sampling " << direct << " (z=" << z5 << "); ";
    out.require(std::abs(z5) < 4, "d=5 outside 4 combined sigma");

    Estimate low3 = estimate(config(NoiseModel::CodeCapacity, 3, 0.01, 0, 1000000, 504));
    Estimate low5 = estimate(config(NoiseModel::CodeCapacity, 5, 0.01, 0, 1000000, 505));
    double sep = (low3.p_l_mean - low5.p_l_mean) / std::hypot(low3.std_error, low5.std_error);
    out.detail << "p=0.01: d3 " << low3.p_l_mean << ", d5 " << low5.p_l_mean << " (" << sep << " sigma)";
    out.require(sep >= 3, "d=5 not below d=3 by 3 sigma");
}

void coherence_penalty(Outcome &out) {
    // Sample count for an effective accuracy of 5e-4: a pilot run measures the
    // per-sample spread of the signed terms, then N is sized so the standard
    // error of the coherent estimate reaches 5e-4.
    const double target = 5e-4;
    const int64_t pilot_n = 100000;
    Estimate pilot = estimate(config(NoiseModel::CodeCapacity, 3, 0.02, 1, pilot_n, 601));
    double spread = pilot.std_error * std::sqrt(static_cast<double>(pilot_n));
    auto n = static_cast<int64_t>(std::ceil(1.1 * (spread / target) * (spread / target)));
    Estimate coherent = estimate(config(NoiseModel::CodeCapacity, 3, 0.02, 1, n, 602));
    Estimate incoherent = estimate(config(NoiseModel::CodeCapacity, 3, 0.02, 0, n, 603));
    double sep = (coherent.p_l_mean - incoherent.p_l_mean) / std::hypot(coherent.std_error, incoherent.std_error);
    int64_t hoeffding = plan_samples(target, 0.05, coherent.r_tot());
    out.detail.precision(6);
    out.detail << "N=" << n << " (Hoeffding bound would need " << hoeffding << "); p_L(r=1) = " << coherent.p_l_mean
               << " +- " << coherent.std_error << ", p_L(r=0) = " << incoherent.p_l_mean << " +- "
               << incoherent.std_error << " (" << sep << " sigma)";
    out.require(coherent.std_error <= target, "standard error above 5e-4");
    out.require(sep >= 3, "separation below 3 sigma");
}

void phenomenological_d5(Outcome &out) {
    const double r = 0.1;
    NoiseParams params = NoiseParams::make(0.02, r);
    out.require(robustness(params) == 1.0, "R != 1 at the chosen r");
    RunConfig c = config(NoiseModel::Phenomenological, 5, 0.02, r, 1000000, 701);
    c.workers = std::max(1u, std::thread::hardware_concurrency());
    Estimate e = estimate(c);
    out.detail.precision(6);
    out.detail << "r=" << r << ", 81 qubits, 10^6 samples on " << c.workers << " worker(s): p_L = " << e.p_l_mean
               << " +- " << e.std_error << " in " << e.wall_time_s << " s";
    out.require(e.std_error < 1e-3, "standard error not below 1e-3");
    out.require(e.wall_time_s <= 3600, "runtime above 1 hour");
}

bool residual_trivial(const CodeLayout &layout, std::vector<size_t> error) {
    SyndromeHistory h(1, layout.num_z_checks());
    auto s = syndrome_of_x_pattern(layout, error);
    for (size_t c = 0; c < s.size(); c++) {
        h.at(1, c) = s[c];
    }
    Recovery r = decode(h, layout);
    error.insert(error.end(), r.flips.begin(), r.flips.end());
    auto residual = syndrome_of_x_pattern(layout, error);
    return std::all_of(residual.begin(), residual.end(), [](uint8_t v) { return v == 0; }) && !flips_logical(layout, error);
}

void decoder_exactness(Outcome &out) {
    Rng rng(801);
    int mismatched = 0;
    for (int trial = 0; trial < 200; trial++) {
        int d = 3 + 2 * static_cast<int>(rng() % 3);
        CodeLayout layout = build_layout(d);
        size_t k = rng() % 13;
        std::vector<DetectionEvent> events;
        while (events.size() < k) {
            int row_idx = static_cast<int>(rng() % static_cast<uint64_t>(d - 1));
            int col_idx = static_cast<int>(rng() % static_cast<uint64_t>(d));
            int round = 1 + static_cast<int>(rng() % static_cast<uint64_t>(d));
            DetectionEvent e{layout.z_check_index(row_idx, col_idx), row_idx, col_idx, round};
            if (std::find(events.begin(), events.end(), e) == events.end()) {
                events.push_back(e);
            }
        }
        MatchingInstance instance = make_instance(events, layout);
        mismatched += mwpm(instance).weight != oracle::brute_force_matching(instance).weight;
    }
    int uncorrected = 0;
    int patterns = 0;
    for (int d : {3, 5}) {
        CodeLayout layout = build_layout(d);
        size_t n = layout.num_data();
        for (size_t a = 0; a < n; a++) {
            patterns++;
            uncorrected += !residual_trivial(layout, {a});
            if (d == 5) {
                for (size_t b = a + 1; b < n; b++) {
                    patterns++;
                    uncorrected += !residual_trivial(layout, {a, b});
                }
            }
        }
    }
    out.detail << "200 instances, " << mismatched << " weight mismatches; " << patterns << " error patterns, "
               << uncorrected << " uncorrected";
    out.require(mismatched == 0, "mwpm weight differs from brute force");
    out.require(uncorrected == 0, "low-weight error not corrected");
}

std::string strip_wall_time(const std::string &text) {
    static const std::regex json_field(R"("wall_time_s":[^,}]*)");
    return std::regex_replace(text, json_field, "\"wall_time_s\":_");
}

std::string strip_csv_wall_time(const std::string &text) {
    // wall_time_s is the second-to-last column.
    std::istringstream in(text);
    std::string line;
    std::string result;
    while (std::getline(in, line)) {
        size_t last = line.rfind(',');
        size_t before = last == std::string::npos ? std::string::npos : line.rfind(',', last - 1);
        if (before != std::string::npos) {
            line = line.substr(0, before + 1) + "_" + line.substr(last);
        }
        result += line + "\n";
    }
    return result;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void determinism(Outcome &out) {
    if (g_cli.empty()) {
        out.require(false, "no --cli binary given");
        return;
    }
    auto dir = std::filesystem::temp_directory_path() / ("qpsurf_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto sweep = dir / "sweep.json";
    std::ofstream(sweep) << R"({"model": ["code", "pheno"], "d": 3, "p": [0.02, 0.08], "r": [0, 1]})";
    int identical = 0;
    int compared = 0;
    for (std::string format : {"jsonl", "csv"}) {
        std::vector<std::string> outputs;
        for (int workers : {1, 8}) {
            auto path = dir / ("w" + std::to_string(workers) + "." + format);
            std::string cmd = "\"" + g_cli + "\" run --sweep \"" + sweep.string() + "\" --samples 20000 --seed 9001 --workers " +
                              std::to_string(workers) + " --format " + format + " --out \"" + path.string() + "\"";
            int status = std::system(cmd.c_str());
            out.require(status == 0, "cli run failed: " + cmd);
            std::string text = read_file(path);
            outputs.push_back(format == "csv" ? strip_csv_wall_time(text) : strip_wall_time(text));
        }
        compared++;
        identical += !outputs[0].empty() && outputs[0] == outputs[1];
        size_t records = static_cast<size_t>(std::count(outputs[0].begin(), outputs[0].end(), '\n'));
        out.require(records == (format == "csv" ? 9u : 8u), "unexpected record count in " + format);
    }
    std::filesystem::remove_all(dir);
    out.detail << identical << "/" << compared << " formats byte-identical across workers {1, 8} (8 records each)";
    out.require(identical == compared, "outputs differ");
}

}  // namespace

int main(int argc, char **argv) {
    int only = 0;
    for (int i = 1; i < argc; i++) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            g_cli = argv[++i];
        } else if (arg == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: " << argv[0] << " --cli PATH [--only N]\n";
            return 2;
        }
    }

    struct Criterion {
        const char *name;
        std::function<void(Outcome &)> run;
    };
    std::vector<Criterion> criteria = {
        {"ptm_reconstruction", ptm_reconstruction},
        {"robustness_boundary", robustness_boundary},
        {"cost_formulas", cost_formulas},
        {"exact_oracle_equivalence", exact_oracle_equivalence},
        {"classical_limit", classical_limit},
        {"coherence_penalty", coherence_penalty},
        {"phenomenological_d5", phenomenological_d5},
        {"decoder_exactness", decoder_exactness},
        {"determinism", determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        if (only != 0 && static_cast<size_t>(only) != i + 1) {
            continue;
        }
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(out);
        } catch (const std::exception &e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        failures += !out.pass;
        std::printf("%s %zu %s (%.1f s): %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, seconds_since(start),
                    out.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
