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

#include "qpsurf/engine.h"

#include <chrono>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace qpsurf {

namespace {

void apply_channel(Tableau &state, ChannelTag tag, size_t q) {
    switch (tag) {
        case ChannelTag::Identity:
            break;
        case ChannelTag::FlipX:
            state.apply_x(q);
            break;
        case ChannelTag::SqrtX:
            state.apply_sqrt_x(q);
            break;
        case ChannelTag::FlipXSqrtX:
            state.apply_sqrt_x(q);
            state.apply_x(q);
            break;
    }
}

struct PartialSums {
    int64_t sum_twice = 0;
    int64_t sum_twice_sq = 0;
};

}  // namespace

double Estimate::r_tot() const {
    return std::pow(10.0, r_tot_log10);
}

Tableau prepare_logical_zero(const CodeLayout &layout) {
    size_t num_data = layout.num_data();
    Tableau state(num_data + layout.num_z_checks());
    for (size_t j = 0; j < layout.x_checks.size(); j++) {
        size_t ancilla = num_data + j % layout.num_z_checks();
        state.apply_h(ancilla);
        for (size_t q : layout.x_checks[j].support) {
            state.apply_cnot(ancilla, q);
        }
        state.apply_h(ancilla);
        state.project_z(ancilla, +1);
    }
    return state;
}

SampleContext::SampleContext(const RunConfig &config)
    : config_(config),
      layout_(build_layout(config.d)),
      decomp_(decompose(config.noise)),
      initial_(prepare_logical_zero(layout_)),
      logical_z_(layout_.logical_z(layout_.num_data() + layout_.num_z_checks())) {
    for (size_t c = 0; c < layout_.num_z_checks(); c++) {
        z_check_paulis_.push_back(layout_.z_check_pauli(c, num_qubits()));
    }
    ln_r_tot_ = static_cast<double>(noise_locations(config.model, config.d)) * std::log(decomp_.robustness);
    r_tot_ = std::exp(ln_r_tot_);
}

int SampleContext::rounds() const {
    return config_.model == NoiseModel::CodeCapacity ? 1 : config_.d;
}

SampleOutcome SampleContext::run_sample(uint64_t sample_index) const {
    Rng rng(config_.seed, sample_index);
    Tableau state = initial_;
    SampleOutcome out;
    size_t num_data = layout_.num_data();
    size_t num_checks = layout_.num_z_checks();
    int rounds = this->rounds();
    bool noisy_readout = config_.model == NoiseModel::Phenomenological;
    SyndromeHistory history(rounds, num_checks);

    auto noisy = [&](size_t q) {
        ChannelDraw draw = sample_channel(decomp_, rng);
        apply_channel(state, draw.tag, q);
        out.lambda *= draw.sign;
        out.channel_draw_count++;
    };

    for (int t = 1; t <= rounds; t++) {
        for (size_t q = 0; q < num_data; q++) {
            noisy(q);
        }
        for (size_t c = 0; c < num_checks; c++) {
            size_t ancilla = num_data + c;
            for (size_t q : layout_.z_checks[c].support) {
                state.apply_cnot(q, ancilla);
            }
            // The final round is read out perfectly.
            if (noisy_readout && t < rounds) {
                noisy(ancilla);
            }
            int outcome = state.measure_z(ancilla, rng).outcome;
            history.at(t, c) = outcome < 0;
            if (outcome < 0) {
                state.apply_x(ancilla);
            }
        }
    }

    Recovery recovery = decode(history, layout_);
    for (size_t q : recovery.flips) {
        state.apply_x(q);
    }
    for (const auto &check : z_check_paulis_) {
        if (state.expectation(check) != 1) {
            throw std::logic_error("recovery left a nonzero syndrome (sample " + std::to_string(sample_index) + ")");
        }
    }
    out.infidelity = (1 - state.expectation(logical_z_)) / 2.0;
    return out;
}

SampleOutcome run_sample(const SampleContext &context, uint64_t sample_index) {
    return context.run_sample(sample_index);
}

int64_t resolve_samples(const RunConfig &config) {
    if (config.samples) {
        if (*config.samples < 1) {
            throw std::invalid_argument("sample count must be positive");
        }
        return *config.samples;
    }
    CostEstimate plan = cost(config.model, config.d, config.noise, config.epsilon, config.delta);
    if (!plan.feasible) {
        throw InfeasibleBudget("planned sample count exceeds 2^63-1 (log10 R_tot^2 = " +
                               std::to_string(plan.log10_r_tot_squared) + ")");
    }
    return plan.samples;
}

Estimate estimate(const RunConfig &config) {
    if (config.workers < 1) {
        throw std::invalid_argument("workers must be positive");
    }
    build_layout(config.d);
    int64_t n = resolve_samples(config);
    auto start = std::chrono::steady_clock::now();
    SampleContext context(config);
    if (!std::isfinite(context.r_tot())) {
        throw InfeasibleBudget("R_tot overflows a double");
    }
    double r_tot = context.r_tot();

    int workers = static_cast<int>(std::min<int64_t>(config.workers, n));
    std::vector<PartialSums> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](int w) {
        try {
            int64_t begin = n * w / workers;
            int64_t end = n * (w + 1) / workers;
            PartialSums sums;
            for (int64_t i = begin; i < end; i++) {
                SampleOutcome s = context.run_sample(static_cast<uint64_t>(i));
                int64_t twice = s.lambda * static_cast<int64_t>(std::lround(2 * s.infidelity));
                double term = r_tot * twice / 2.0;
                if (std::abs(term) > r_tot) {
                    throw std::logic_error("signed term outside [-R_tot, R_tot]");
                }
                sums.sum_twice += twice;
                sums.sum_twice_sq += twice * twice;
            }
            partial[w] = sums;
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; w++) {
            threads.emplace_back(work, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    Estimate out;
    for (const auto &s : partial) {
        out.sum_twice += s.sum_twice;
        out.sum_twice_sq += s.sum_twice_sq;
    }
    out.n_samples = n;
    out.r_tot_log10 = context.ln_r_tot() / std::log(10.0);
    long double nn = static_cast<long double>(n);
    long double mean_x = static_cast<long double>(out.sum_twice) / (2 * nn);
    out.p_l_mean = static_cast<double>(static_cast<long double>(r_tot) * mean_x);
    if (n > 1) {
        long double sum_sq = static_cast<long double>(out.sum_twice_sq) / 4;
        long double var_x = (sum_sq - nn * mean_x * mean_x) / (nn - 1);
        if (var_x < 0) {
            var_x = 0;
        }
        out.std_error = static_cast<double>(static_cast<long double>(r_tot) * std::sqrt(var_x / nn));
    }
    out.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace qpsurf
