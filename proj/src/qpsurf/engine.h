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

#ifndef QPSURF_ENGINE_H
#define QPSURF_ENGINE_H

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "qpsurf/code.h"
#include "qpsurf/decoder.h"
#include "qpsurf/quasiprob.h"
#include "qpsurf/tableau.h"

namespace qpsurf {

struct RunConfig {
    NoiseModel model = NoiseModel::CodeCapacity;
    int d = 3;
    NoiseParams noise;
    /// Explicit sample count. When unset, (epsilon, delta) plan the count.
    std::optional<int64_t> samples;
    double epsilon = 0.01;
    double delta = 0.05;
    uint64_t seed = 0;
    int workers = 1;
};

/// Thrown when the planned sample count does not fit in int64.
class InfeasibleBudget : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct SampleOutcome {
    /// Product of the signs of every sampled channel.
    int lambda = 1;
    /// Infidelity of the corrected state: 0, 1/2 or 1.
    double infidelity = 0;
    int64_t channel_draw_count = 0;
};

struct Estimate {
    double p_l_mean = 0;
    double std_error = 0;
    int64_t n_samples = 0;
    double r_tot_log10 = 0;
    double wall_time_s = 0;
    /// Sum of 2 * lambda * F and of (2 * lambda * F)^2 over all samples. These
    /// are exact integers, so the reduction is independent of scheduling.
    int64_t sum_twice = 0;
    int64_t sum_twice_sq = 0;

    double r_tot() const;
};

/// Everything a sample needs that does not depend on the sample index.
///
/// Qubits [0, num_data) are data qubits, followed by one reusable ancilla per
/// Z-check. The prepared state is |0_L> on the data with all ancillas in |0>.
class SampleContext {
   public:
    explicit SampleContext(const RunConfig &config);

    const RunConfig &config() const {
        return config_;
    }
    const CodeLayout &layout() const {
        return layout_;
    }
    const QuasiDecomposition &decomposition() const {
        return decomp_;
    }
    const Tableau &initial_state() const {
        return initial_;
    }
    int rounds() const;
    size_t num_qubits() const {
        return layout_.num_data() + layout_.num_z_checks();
    }
    double r_tot() const {
        return r_tot_;
    }
    double ln_r_tot() const {
        return ln_r_tot_;
    }

    SampleOutcome run_sample(uint64_t sample_index) const;

   private:
    RunConfig config_;
    CodeLayout layout_;
    QuasiDecomposition decomp_;
    Tableau initial_;
    PauliString logical_z_;
    std::vector<PauliString> z_check_paulis_;
    double ln_r_tot_;
    double r_tot_;
};

/// Prepares |0_L> (X-checks projected to +1 through ancilla measurements) on
/// data qubits plus one ancilla per Z-check.
Tableau prepare_logical_zero(const CodeLayout &layout);

SampleOutcome run_sample(const SampleContext &context, uint64_t sample_index);

/// Resolves the sample count: the explicit count, or the Hoeffding plan.
/// Throws InfeasibleBudget when the plan overflows.
int64_t resolve_samples(const RunConfig &config);

Estimate estimate(const RunConfig &config);

}  // namespace qpsurf

#endif
