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

#include "qpsurf/quasiprob.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qpsurf {

namespace {

// Largest double strictly below 2^63.
constexpr double kMaxSamples = 9223372036854774784.0;

struct TransferPlane {
    double u;  // (1-2p) cos(2 alpha)
    double v;  // (1-2p) sin(2 alpha)
    double u_plus_abs_v;
};

TransferPlane transfer_plane(const NoiseParams &params) {
    double scale = 1 - 2 * params.p;
    double angle = 2 * params.rotation_angle();
    double c = std::cos(angle);
    double s = std::sin(angle);
    return {scale * c, scale * s, scale * (c + std::abs(s))};
}

void check_unit_interval(double value, const char *name) {
    if (!(value > 0 && value < 1)) {
        throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
    }
}

}  // namespace

NoiseParams NoiseParams::make(double p, double r) {
    if (!(p >= 0 && p < 0.5)) {
        throw std::invalid_argument("p must lie in [0, 0.5), got " + std::to_string(p));
    }
    if (!(r >= 0 && r <= 1)) {
        throw std::invalid_argument("r must lie in [0, 1], got " + std::to_string(r));
    }
    return NoiseParams{p, r};
}

double NoiseParams::theta() const {
    return std::asin(std::sqrt(p));
}

std::string_view channel_name(ChannelTag tag) {
    switch (tag) {
        case ChannelTag::Identity:
            return "I";
        case ChannelTag::FlipX:
            return "X";
        case ChannelTag::SqrtX:
            return "V";
        case ChannelTag::FlipXSqrtX:
            return "XV";
    }
    return "?";
}

QuasiDecomposition decompose(const NoiseParams &checked) {
    NoiseParams params = NoiseParams::make(checked.p, checked.r);
    TransferPlane plane = transfer_plane(params);
    double u = plane.u;
    double w = std::abs(plane.v);
    // c_XV - c_V = v carries the rotation; [XV] takes the positive side when v >= 0.
    size_t positive = static_cast<size_t>(plane.v >= 0 ? ChannelTag::FlipXSqrtX : ChannelTag::SqrtX);
    size_t negative = static_cast<size_t>(plane.v >= 0 ? ChannelTag::SqrtX : ChannelTag::FlipXSqrtX);

    QuasiDecomposition out;
    auto &c = out.coeffs;
    if (plane.u_plus_abs_v <= 1) {
        c[static_cast<size_t>(ChannelTag::Identity)] = (1 + u - w) / 2;
        c[static_cast<size_t>(ChannelTag::FlipX)] = (1 - u - w) / 2;
        c[positive] = w;
        c[negative] = 0;
    } else {
        c[static_cast<size_t>(ChannelTag::Identity)] = u;
        c[static_cast<size_t>(ChannelTag::FlipX)] = 0;
        c[positive] = (1 - u + w) / 2;
        c[negative] = (1 - u - w) / 2;
    }
    double total = 0;
    for (double ck : c) {
        total += std::abs(ck);
    }
    out.robustness = plane.u_plus_abs_v <= 1 ? 1.0 : total;
    for (size_t k = 0; k < 4; k++) {
        out.probs[k] = std::abs(c[k]) / total;
        out.signs[k] = c[k] < 0 ? -1 : +1;
    }
    return out;
}

double robustness(const NoiseParams &params) {
    // Taken from the decomposition so that sampling weights and R agree exactly.
    return decompose(params).robustness;
}

ChannelDraw sample_channel(const QuasiDecomposition &decomp, Rng &rng) {
    double x = rng.uniform();
    size_t k = 0;
    double acc = decomp.probs[0];
    while (k < 3 && !(x < acc)) {
        k++;
        acc += decomp.probs[k];
    }
    // Skip zero-probability tags that rounding could otherwise select.
    while (decomp.probs[k] == 0 && k > 0) {
        k--;
    }
    return {static_cast<ChannelTag>(k), decomp.signs[k]};
}

Ptm ptm(ChannelTag tag) {
    Ptm m{};
    m[0][0] = 1;
    m[1][1] = 1;
    switch (tag) {
        case ChannelTag::Identity:
            m[2][2] = m[3][3] = 1;
            break;
        case ChannelTag::FlipX:
            m[2][2] = m[3][3] = -1;
            break;
        case ChannelTag::SqrtX:
            m[2][3] = -1;
            m[3][2] = 1;
            break;
        case ChannelTag::FlipXSqrtX:
            m[2][3] = 1;
            m[3][2] = -1;
            break;
    }
    return m;
}

Ptm ptm(const NoiseParams &params) {
    double scale = 1 - 2 * params.p;
    double angle = 2 * params.rotation_angle();
    Ptm m{};
    m[0][0] = 1;
    m[1][1] = 1;
    m[2][2] = scale * std::cos(angle);
    m[3][3] = scale * std::cos(angle);
    m[2][3] = scale * std::sin(angle);
    m[3][2] = -scale * std::sin(angle);
    return m;
}

std::string_view model_name(NoiseModel model) {
    return model == NoiseModel::CodeCapacity ? "code" : "pheno";
}

NoiseModel parse_model(std::string_view text) {
    if (text == "code" || text == "code_capacity") {
        return NoiseModel::CodeCapacity;
    }
    if (text == "pheno" || text == "phenomenological") {
        return NoiseModel::Phenomenological;
    }
    throw std::invalid_argument("unknown noise model '" + std::string(text) + "'");
}

int64_t noise_locations(NoiseModel model, int d) {
    int64_t dd = d;
    if (model == NoiseModel::CodeCapacity) {
        return dd * dd + (dd - 1) * (dd - 1);
    }
    return dd * (3 * dd * dd - 4 * dd + 2);
}

double CostEstimate::r_tot() const {
    return std::pow(10.0, log10_r_tot_squared / 2);
}

double CostEstimate::r_tot_squared() const {
    return std::pow(10.0, log10_r_tot_squared);
}

int64_t plan_samples(double epsilon, double delta, double r_tot) {
    if (!(r_tot >= 1)) {
        throw std::invalid_argument("r_tot must be at least 1");
    }
    return plan_samples_log(epsilon, delta, std::log(r_tot));
}

int64_t plan_samples_log(double epsilon, double delta, double ln_r_tot) {
    check_unit_interval(epsilon, "epsilon");
    check_unit_interval(delta, "delta");
    double base = 2 / (epsilon * epsilon) * std::log(2 / delta);
    double ln_m = std::log(base) + 2 * ln_r_tot;
    if (ln_m >= std::log(kMaxSamples)) {
        return -1;
    }
    double m = std::ceil(base * std::exp(2 * ln_r_tot));
    if (m > kMaxSamples) {
        return -1;
    }
    return static_cast<int64_t>(m);
}

CostEstimate cost(NoiseModel model, int d, const NoiseParams &params, double epsilon, double delta) {
    if (d < 1) {
        throw std::invalid_argument("code distance must be positive");
    }
    CostEstimate out;
    out.locations = noise_locations(model, d);
    out.robustness = robustness(params);
    double ln_r_tot = static_cast<double>(out.locations) * std::log(out.robustness);
    out.log10_r_tot_squared = 2 * ln_r_tot / std::log(10.0);
    out.samples = plan_samples_log(epsilon, delta, ln_r_tot);
    out.feasible = out.samples >= 0;
    return out;
}

}  // namespace qpsurf
