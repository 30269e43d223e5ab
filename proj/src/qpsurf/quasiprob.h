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

#ifndef QPSURF_QUASIPROB_H
#define QPSURF_QUASIPROB_H

#include <array>
#include <cstdint>
#include <string_view>

#include "qpsurf/rng.h"

namespace qpsurf {

/// Bit-flip probability p and noise coherence r. The over-rotation angle is
/// r * theta with sin^2(theta) = p.
struct NoiseParams {
    double p = 0;
    double r = 0;

    /// Throws std::invalid_argument unless p in [0, 1/2) and r in [0, 1].
    static NoiseParams make(double p, double r);
    double theta() const;
    double rotation_angle() const {
        return r * theta();
    }
};

/// The four Clifford channels used as the decomposition basis:
/// [I], [X], [V] and [XV] with V = exp(-i pi/4 X).
enum class ChannelTag : uint8_t { Identity = 0, FlipX = 1, SqrtX = 2, FlipXSqrtX = 3 };

inline constexpr std::array<ChannelTag, 4> kAllChannels = {
    ChannelTag::Identity, ChannelTag::FlipX, ChannelTag::SqrtX, ChannelTag::FlipXSqrtX};

std::string_view channel_name(ChannelTag tag);

using Ptm = std::array<std::array<double, 4>, 4>;

/// Signed decomposition N = sum_k c_k S_k, indexed by ChannelTag.
struct QuasiDecomposition {
    std::array<double, 4> coeffs{};
    std::array<double, 4> probs{};
    std::array<int, 4> signs{};
    double robustness = 1;

    double coeff(ChannelTag tag) const {
        return coeffs[static_cast<size_t>(tag)];
    }
    double prob(ChannelTag tag) const {
        return probs[static_cast<size_t>(tag)];
    }
    int sign(ChannelTag tag) const {
        return signs[static_cast<size_t>(tag)];
    }
};

/// Minimal-L1 decomposition of the noise channel (bit flip after over-rotation).
QuasiDecomposition decompose(const NoiseParams &params);

/// Channel robustness max(1, u + |v|), where (u, v) are the Y/Z-plane transfer
/// components of the noise channel.
double robustness(const NoiseParams &params);

struct ChannelDraw {
    ChannelTag tag;
    int sign;
};

ChannelDraw sample_channel(const QuasiDecomposition &decomp, Rng &rng);

/// Pauli transfer matrices in the (I, X, Y, Z) basis; entry [i][j] is
/// Tr(P_i E(P_j)) / 2.
Ptm ptm(ChannelTag tag);
Ptm ptm(const NoiseParams &params);

enum class NoiseModel { CodeCapacity, Phenomenological };

std::string_view model_name(NoiseModel model);
/// Accepts "code", "code_capacity", "pheno", "phenomenological".
NoiseModel parse_model(std::string_view text);

/// Number of noisy channel applications for the model at distance d.
int64_t noise_locations(NoiseModel model, int d);

struct CostEstimate {
    int64_t locations = 0;
    double robustness = 1;
    /// log10 of R_tot^2 = robustness^(2 * locations).
    double log10_r_tot_squared = 0;
    /// Hoeffding sample count, valid only when `feasible`.
    int64_t samples = 0;
    bool feasible = true;

    double r_tot() const;
    double r_tot_squared() const;
};

/// Hoeffding sample count ceil((2 / eps^2) r_tot^2 ln(2 / delta)), or -1 when
/// it does not fit in int64. Throws on eps or delta outside (0, 1) or r_tot < 1.
int64_t plan_samples(double epsilon, double delta, double r_tot);

/// Same as plan_samples with r_tot supplied as a natural log.
int64_t plan_samples_log(double epsilon, double delta, double ln_r_tot);

CostEstimate cost(NoiseModel model, int d, const NoiseParams &params, double epsilon, double delta);

}  // namespace qpsurf

#endif
